#include "dihedral/characters.hpp"

#include <cmath>
#include <numbers>

#include "dihedral/errors.hpp"

namespace dihedral {

namespace {

// 2 pi (num / n) with num reduced mod n first so large products keep precision.
double angle(long long num, int n) {
  long long r = num % n;
  if (r < 0) r += n;
  return 2.0 * std::numbers::pi * static_cast<double>(r) / n;
}

constexpr double kIntegralityGuard = 1e-6;

}  // namespace

IrreducibleLabel IrreducibleLabel::linear(LinearKind k) {
  switch (k) {
    case LinearKind::Triv: return {Kind::Triv, 0};
    case LinearKind::Det: return {Kind::Det, 0};
    case LinearKind::Sgn: return {Kind::Sgn, 0};
    case LinearKind::DetSgn: return {Kind::DetSgn, 0};
  }
  return {Kind::Triv, 0};
}

LinearKind IrreducibleLabel::linear_kind() const {
  switch (kind) {
    case Kind::Triv: return LinearKind::Triv;
    case Kind::Det: return LinearKind::Det;
    case Kind::Sgn: return LinearKind::Sgn;
    case Kind::DetSgn: return LinearKind::DetSgn;
    case Kind::Pi2: break;
  }
  throw ParameterError("pi2 is not a linear character");
}

std::string IrreducibleLabel::str() const {
  if (kind == Kind::Pi2) return "pi2(" + std::to_string(j) + ")";
  return to_string(linear_kind());
}

IrreducibleLabel IrreducibleLabel::parse(const std::string& text) {
  if (text == "triv") return {Kind::Triv, 0};
  if (text == "det") return {Kind::Det, 0};
  if (text == "sgn") return {Kind::Sgn, 0};
  if (text == "det*sgn" || text == "detsgn" || text == "det.sgn") return {Kind::DetSgn, 0};
  std::string digits;
  if (text.rfind("pi2(", 0) == 0 && text.size() > 5 && text.back() == ')')
    digits = text.substr(4, text.size() - 5);
  else if (text.rfind("pi2:", 0) == 0)
    digits = text.substr(4);
  if (!digits.empty()) {
    try {
      std::size_t used = 0;
      const int j = std::stoi(digits, &used);
      if (used == digits.size()) return pi2(j);
    } catch (const std::exception&) {
    }
  }
  throw ParameterError("unknown irreducible label '" + text + "'");
}

std::vector<IrreducibleLabel> irreducibles(int n) {
  require_group_order(n);
  std::vector<IrreducibleLabel> out{{IrreducibleLabel::Kind::Triv, 0},
                                    {IrreducibleLabel::Kind::Det, 0}};
  if (n % 2 == 0) {
    out.push_back({IrreducibleLabel::Kind::Sgn, 0});
    out.push_back({IrreducibleLabel::Kind::DetSgn, 0});
  }
  const int top = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
  for (int j = 1; j <= top; ++j) out.push_back(IrreducibleLabel::pi2(j));
  return out;
}

bool is_irreducible_of(int n, const IrreducibleLabel& label) {
  if (n < 3) return false;
  switch (label.kind) {
    case IrreducibleLabel::Kind::Triv:
    case IrreducibleLabel::Kind::Det: return true;
    case IrreducibleLabel::Kind::Sgn:
    case IrreducibleLabel::Kind::DetSgn: return n % 2 == 0;
    case IrreducibleLabel::Kind::Pi2:
      return label.j >= 1 && label.j <= (n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1);
  }
  return false;
}

double pi2_character(int j, const Element& g) {
  if (g.reflected()) return 0.0;
  return 2.0 * std::cos(angle(static_cast<long long>(j) * g.rot(), g.n()));
}

double character_value(const IrreducibleLabel& label, const Element& g) {
  if (!is_irreducible_of(g.n(), label))
    throw ParameterError(label.str() + " is not an irreducible of D_" + std::to_string(2 * g.n()));
  if (label.kind == IrreducibleLabel::Kind::Pi2) return pi2_character(label.j, g);
  return linear_character_value(label.linear_kind(), g);
}

int rho_character(const Element& g) {
  const int n = g.n();
  if (!g.reflected()) return g.rot() == 0 ? n : 0;
  if (n % 2 == 1) return 1;
  // n even: CR^k with k even has no fixed vertex, with k odd it fixes two.
  return g.rot() % 2 == 0 ? 0 : 2;
}

const CharacterRow& CharacterTable::row(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return r;
  throw ParameterError("no row '" + label + "' in the character table of D_" +
                       std::to_string(2 * n));
}

CharacterTable character_table(int n) {
  require_group_order(n);
  CharacterTable t{n, {}, {}, {}, {}};
  auto add_class = [&](const Element& rep, std::string name, int size) {
    t.class_reps.push_back(rep);
    t.class_names.push_back(std::move(name));
    t.class_sizes.push_back(size);
  };

  add_class(Element::identity(n), "e", 1);
  const int m = n / 2;
  if (n % 2 == 0) add_class(Element::rotation(n, m), "R^" + std::to_string(m), 1);
  const int top = n % 2 == 1 ? (n - 1) / 2 : m - 1;
  for (int k = 1; k <= top; ++k) add_class(Element::rotation(n, k), "R^+-" + std::to_string(k), 2);
  if (n % 2 == 1) {
    add_class(Element::reflection(n, 0), "C", n);
  } else {
    add_class(Element::reflection(n, 0), "C", m);
    add_class(Element::reflection(n, 1), "CR", m);
  }

  for (const auto& label : irreducibles(n)) {
    CharacterRow row{label.str(), {}};
    for (const auto& rep : t.class_reps) row.values.emplace_back(character_value(label, rep), 0.0);
    t.rows.push_back(std::move(row));
  }
  CharacterRow rho{"rho", {}};
  for (const auto& rep : t.class_reps) rho.values.emplace_back(rho_character(rep), 0.0);
  t.rows.push_back(std::move(rho));
  return t;
}

Complex inner_product(const CharacterTable& table, const std::string& row_a,
                      const std::string& row_b) {
  const auto& a = table.row(row_a);
  const auto& b = table.row(row_b);
  Complex acc{0.0, 0.0};
  for (std::size_t c = 0; c < table.class_sizes.size(); ++c)
    acc += static_cast<double>(table.class_sizes[c]) * a.values[c] * std::conj(b.values[c]);
  return acc / static_cast<double>(2 * table.n);
}

std::map<IrreducibleLabel, int> decompose_rho(int n) {
  const CharacterTable table = character_table(n);
  std::map<IrreducibleLabel, int> out;
  for (const auto& label : irreducibles(n)) {
    const Complex ip = inner_product(table, "rho", label.str());
    const double rounded = std::round(ip.real());
    if (std::abs(ip - Complex(rounded, 0.0)) >= kIntegralityGuard || rounded < 0)
      throw DomainError("multiplicity of " + label.str() + " in rho is not a non-negative integer");
    out[label] = static_cast<int>(rounded);
  }
  return out;
}

double root_of_unity_sum(int n, long long j) {
  if (n < 2) throw ParameterError("root_of_unity_sum needs n >= 2");
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += std::cos(angle(j * k, n));
  return acc;
}

}  // namespace dihedral
