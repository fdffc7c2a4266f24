#include "dihedral/group.hpp"

#include <cctype>

#include "dihedral/errors.hpp"

namespace dihedral {

namespace {

int reduce(long long k, int n) {
  const long long r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_group(const Element& a, const Element& b) {
  if (a.n() != b.n())
    throw ParameterError("elements of D_" + std::to_string(2 * a.n()) + " and D_" +
                         std::to_string(2 * b.n()) + " cannot be combined");
}

}  // namespace

Element::Element(int n, bool reflected, long long rot)
    : n_(n), reflected_(reflected), rot_(0) {
  require_group_order(n);
  rot_ = reduce(rot, n);
}

Element Element::from_index(int n, int index) {
  if (index < 0 || index >= 2 * n) throw ParameterError("basis index out of range");
  return Element(n, index >= n, index % n);
}

std::string Element::word() const {
  std::string out = reflected_ ? "C" : "";
  if (rot_ == 1) out += "R";
  if (rot_ > 1) out += "R^" + std::to_string(rot_);
  return out.empty() ? "e" : out;
}

Element Element::parse(int n, const std::string& word) {
  if (word == "e") return identity(n);
  std::size_t pos = 0;
  bool reflected = false;
  if (pos < word.size() && word[pos] == 'C') {
    reflected = true;
    ++pos;
  }
  long long k = 0;
  if (pos < word.size()) {
    if (word[pos] != 'R') throw ParameterError("bad group word '" + word + "'");
    ++pos;
    k = 1;
    if (pos < word.size() && word[pos] == '^') ++pos;
    if (pos < word.size()) {
      const std::string digits = word.substr(pos);
      bool ok = !digits.empty();
      for (char ch : digits) ok = ok && (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-');
      if (!ok) throw ParameterError("bad group word '" + word + "'");
      k = std::stoll(digits);
    }
  } else if (!reflected) {
    throw ParameterError("bad group word '" + word + "'");
  }
  return Element(n, reflected, k);
}

// C^a R^x . C^b R^y: moving R^x past C^b negates x when b = 1 (CRC = R^{-1}).
Element mul(const Element& a, const Element& b) {
  require_same_group(a, b);
  const long long k = (b.reflected() ? -a.rot() : a.rot()) + b.rot();
  return Element(a.n(), a.reflected() != b.reflected(), k);
}

Element inv(const Element& a) {
  if (a.reflected()) return a;
  return Element(a.n(), false, -static_cast<long long>(a.rot()));
}

Element power(const Element& a, long long e) {
  Element base = e < 0 ? inv(a) : a;
  if (e < 0) e = -e;
  Element acc = Element::identity(a.n());
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int element_order(const Element& a) {
  int t = 1;
  Element x = a;
  while (!x.is_identity()) {
    x = mul(x, a);
    ++t;
  }
  return t;
}

Element conjugate(const Element& g, const Element& x) { return mul(mul(g, x), inv(g)); }

Element commutator(const Element& x, const Element& y) {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

std::vector<Element> elements(int n) {
  require_group_order(n);
  std::vector<Element> out;
  out.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) out.push_back(Element::from_index(n, i));
  return out;
}

std::string to_string(LinearKind kind) {
  switch (kind) {
    case LinearKind::Triv: return "triv";
    case LinearKind::Det: return "det";
    case LinearKind::Sgn: return "sgn";
    case LinearKind::DetSgn: return "det*sgn";
  }
  return "?";
}

int linear_character_value(LinearKind kind, const Element& g) {
  const int n = g.n();
  const int det = g.reflected() ? -1 : 1;
  // Sign of the vertex permutation: an n-cycle has sign (-1)^{n-1} and C is a
  // product of floor(n/2) transpositions.
  int sgn = ((static_cast<long long>(g.rot()) * (n - 1)) % 2 == 0) ? 1 : -1;
  if (g.reflected() && (n / 2) % 2 == 1) sgn = -sgn;
  switch (kind) {
    case LinearKind::Triv: return 1;
    case LinearKind::Det: return det;
    case LinearKind::Sgn: return sgn;
    case LinearKind::DetSgn: return det * sgn;
  }
  return 0;
}

int LinearCharacter::value(const Element& g) const {
  if (g.n() != n) throw ParameterError("character and element belong to different groups");
  return linear_character_value(kind, g);
}

ConjugacyClassData class_data(int n) {
  require_group_order(n);
  ConjugacyClassData data{n, {}, {}, n % 2 == 1 ? 1 : 2, {}};

  data.classes.push_back({Element::identity(n)});
  for (int k = 1; 2 * k <= n; ++k) {
    if (2 * k == n)
      data.classes.push_back({Element::rotation(n, k)});
    else
      data.classes.push_back({Element::rotation(n, k), Element::rotation(n, -k)});
  }
  if (n % 2 == 1) {
    std::vector<Element> all;
    for (int k = 0; k < n; ++k) all.push_back(Element::reflection(n, k));
    data.classes.push_back(std::move(all));
  } else {
    std::vector<Element> even, odd;
    for (int k = 0; k < n; ++k) (k % 2 == 0 ? even : odd).push_back(Element::reflection(n, k));
    data.classes.push_back(std::move(even));
    data.classes.push_back(std::move(odd));
  }
  for (const auto& cls : data.classes) data.class_sizes.push_back(static_cast<int>(cls.size()));

  data.linear_characters.push_back({n, LinearKind::Triv});
  data.linear_characters.push_back({n, LinearKind::Det});
  if (n % 2 == 0) {
    data.linear_characters.push_back({n, LinearKind::Sgn});
    data.linear_characters.push_back({n, LinearKind::DetSgn});
  }
  return data;
}

}  // namespace dihedral
