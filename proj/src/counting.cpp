#include "dihedral/counting.hpp"

#include <unordered_set>

#include "dihedral/errors.hpp"
#include "dihedral/group.hpp"
#include "dihedral/permrep.hpp"

namespace dihedral {

namespace {

void require_line_sum(long long r) {
  if (r < 0) throw ParameterError("line sum r must be >= 0, got " + std::to_string(r));
}

void require_odd(int n, const char* what) {
  require_group_order(n);
  if (n % 2 == 0) throw ParameterError(std::string(what) + " is defined only for odd n");
}

void require_even(int n, const char* what) {
  require_group_order(n);
  if (n % 2 == 1) throw ParameterError(std::string(what) + " is defined only for even n");
}

// Odd-shape count C(r + 2p - 1, 2p - 1) - C(r + p - 1, 2p - 1) at parameter p.
BigInt odd_shape(long long p, long long r) {
  return binomial(r + 2 * p - 1, 2 * p - 1) - binomial(r + p - 1, 2 * p - 1);
}

void check_budget(int n, long long r, std::uint64_t max_tuples) {
  const BigInt tuples = tuple_count(n, r);
  if (tuples > max_tuples)
    throw ResourceError("enumerating " + tuples.str() + " tuples for n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + " exceeds the budget of " +
                        std::to_string(max_tuples));
  if (r > 0xFFFF) throw ResourceError("line sum too large for the oracle key encoding");
}

// Visits every 2n-tuple of non-negative integers summing to r, in
// lexicographic order. `enter(pos, v)` / `leave(pos, v)` bracket assigning
// v to coordinate pos; `leaf()` fires once per complete tuple.
template <class Enter, class Leave, class Leaf>
void for_each_composition(int parts, long long r, Enter&& enter, Leave&& leave, Leaf&& leaf) {
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == parts - 1) {
      enter(pos, remaining);
      leaf();
      leave(pos, remaining);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      enter(pos, v);
      self(self, pos + 1, remaining - v);
      leave(pos, v);
    }
  };
  rec(rec, 0, r);
}

}  // namespace

BigInt count_closed(int n, long long r) {
  require_group_order(n);
  require_line_sum(r);
  if (n % 2 == 1) return odd_shape(n, r);
  const long long m = n / 2;
  return binomial(r + 4 * m - 1, 2 * n - 1) - 2 * binomial(r + 3 * m - 1, 2 * n - 1) +
         binomial(r + 2 * m - 1, 2 * n - 1);
}

std::vector<BigInt> generating_numerator(int n) {
  require_group_order(n);
  if (n % 2 == 1) {
    std::vector<BigInt> num(n + 1, 0);
    num[0] = 1;
    num[n] = -1;
    return num;
  }
  const int m = n / 2;
  std::vector<BigInt> num(2 * m + 1, 0);
  num[0] = 1;
  num[m] = -2;
  num[2 * m] = 1;
  return num;
}

CountSeries series(int n, int r_max) {
  require_group_order(n);
  if (r_max < 0) throw ParameterError("r_max must be >= 0");
  const std::vector<BigInt> num = generating_numerator(n);

  // Each division by (1 - x) is a running sum of the coefficients.
  std::vector<BigInt> values(r_max + 1, 0);
  for (std::size_t i = 0; i < num.size() && i < values.size(); ++i) values[i] = num[i];
  for (int pass = 0; pass < 2 * n; ++pass)
    for (int r = 1; r <= r_max; ++r) values[r] += values[r - 1];

  // Cancel (1 - x) factors from the numerator while it vanishes at x = 1.
  std::vector<BigInt> hstar = num;
  for (;;) {
    BigInt at_one = 0;
    for (const auto& c : hstar) at_one += c;
    if (at_one != 0 || hstar.size() < 2) break;
    std::vector<BigInt> q(hstar.size() - 1, 0);
    BigInt running = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      running += hstar[i];
      q[i] = running;
    }
    hstar = std::move(q);
  }
  while (hstar.size() > 1 && hstar.back() == 0) hstar.pop_back();
  return {n, r_max, std::move(values), std::move(hstar)};
}

BigInt count_sum_formula(int n, long long r) {
  require_odd(n, "the sum formula");
  require_line_sum(r);
  BigInt acc = 0;
  for (long long i = 0; i < n; ++i) acc += binomial(r + 2 * n - 2 - i, 2 * n - 2);
  return acc;
}

BigInt count_pie(int n, long long r) {
  require_odd(n, "the inclusion-exclusion formula");
  require_line_sum(r);
  BigInt acc = 0;
  for (long long i = 1; i <= n; ++i) {
    const BigInt term = binomial(n, i) * binomial(r + 2 * n - 1 - i, 2 * n - 1 - i);
    if (i % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

BigInt count_convolution(int n, long long r) {
  require_even(n, "the convolution formula");
  require_line_sum(r);
  const long long m = n / 2;
  BigInt acc = 0;
  for (long long s = 0; s <= r; ++s) acc += odd_shape(m, s) * odd_shape(m, r - s);
  return acc;
}

BigInt tuple_count(int n, long long r) {
  require_group_order(n);
  require_line_sum(r);
  return binomial(r + 2 * n - 1, 2 * n - 1);
}

BigInt oracle_count(int n, long long r, std::uint64_t max_tuples) {
  require_group_order(n);
  require_line_sum(r);
  check_budget(n, r, max_tuples);

  // cells[g] lists the flat row-major positions of the ones of P_g.
  std::vector<std::vector<int>> cells(2 * n);
  for (const auto& g : elements(n))
    for (int col = 0; col < n; ++col) cells[g.index()].push_back(perm_matrix_row(g, col) * n + col);

  // Dedup key: the matrix in row-major order, two bytes per entry.
  std::string key(2 * n * n, '\0');
  std::vector<long long> flat(n * n, 0);
  std::unordered_set<std::string> seen;
  auto add = [&](int pos, long long v, long long sign) {
    if (v == 0) return;
    for (int cell : cells[pos]) flat[cell] += sign * v;
  };
  for_each_composition(
      2 * n, r, [&](int pos, long long v) { add(pos, v, 1); },
      [&](int pos, long long v) { add(pos, v, -1); },
      [&] {
        for (int i = 0; i < n * n; ++i) {
          key[2 * i] = static_cast<char>(flat[i] & 0xFF);
          key[2 * i + 1] = static_cast<char>((flat[i] >> 8) & 0xFF);
        }
        seen.insert(key);
      });
  return BigInt(seen.size());
}

BigInt oracle_canonical(int n, long long r, std::uint64_t max_tuples) {
  require_group_order(n);
  require_line_sum(r);
  check_budget(n, r, max_tuples);

  // Zero counts within the constrained reflection groups: group 0 holds the
  // odd reflections (or every reflection when n is odd), group 1 the even ones.
  int zeros[2] = {0, 0};
  auto group_of = [n](int pos) -> int {
    if (pos < n) return -1;
    if (n % 2 == 1) return 0;
    return (pos - n) % 2 == 1 ? 0 : 1;
  };
  std::uint64_t count = 0;
  for_each_composition(
      2 * n, r,
      [&](int pos, long long v) {
        const int g = group_of(pos);
        if (g >= 0 && v == 0) ++zeros[g];
      },
      [&](int pos, long long v) {
        const int g = group_of(pos);
        if (g >= 0 && v == 0) --zeros[g];
      },
      [&] {
        if (zeros[0] > 0 && (n % 2 == 1 || zeros[1] > 0)) ++count;
      });
  return BigInt(count);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::binomial_in_x(long long a, long long b) {
  if (b < 0) return {};
  RationalPolynomial p = constant(1);
  BigInt factorial = 1;
  for (long long i = 0; i < b; ++i) {
    p = p * linear(Rational(a - i));
    factorial *= i + 1;
  }
  return p * Rational(BigInt(1), factorial);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial count_polynomial(int n) {
  require_group_order(n);
  using P = RationalPolynomial;
  if (n % 2 == 1)
    return P::binomial_in_x(2 * n - 1, 2 * n - 1) + P::binomial_in_x(n - 1, 2 * n - 1) * Rational(-1);
  const long long m = n / 2;
  return P::binomial_in_x(4 * m - 1, 2 * n - 1) +
         P::binomial_in_x(3 * m - 1, 2 * n - 1) * Rational(-2) +
         P::binomial_in_x(2 * m - 1, 2 * n - 1);
}

EhrhartReport check_ehrhart_properties(int n) {
  require_group_order(n);
  const RationalPolynomial h = count_polynomial(n);
  EhrhartReport rep{n, h.degree(), n % 2 == 1 ? 2 * n - 2 : 2 * n - 3,
                    true, true, true, true, true, true};

  for (long long r = 0; r <= 2 * n; ++r)
    if (h(Rational(r)) != Rational(count_closed(n, r))) rep.matches_counts = false;

  const Rational sign = n % 2 == 1 ? 1 : -1;  // (-1)^{n-1}
  for (long long r = 0; r <= 2 * n; ++r)
    if (h(Rational(-r)) != sign * h(Rational(r - n))) rep.reciprocity = false;

  for (long long k = 1; k <= n - 1; ++k)
    if (h(Rational(-k)) != 0) rep.vanishing = false;

  const auto hstar = series(n, 0).hstar;
  const std::size_t len = hstar.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (hstar[i] <= 0) rep.hstar_positive = false;
    if (hstar[i] != hstar[len - 1 - i]) rep.hstar_symmetric = false;
  }
  // Unimodal: non-decreasing up to a peak, then non-increasing.
  std::size_t peak = 0;
  while (peak + 1 < len && hstar[peak + 1] >= hstar[peak]) ++peak;
  for (std::size_t i = peak; i + 1 < len; ++i)
    if (hstar[i + 1] > hstar[i]) rep.hstar_unimodal = false;
  return rep;
}

nlohmann::json series_to_json(const CountSeries& s) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : s.values) values.push_back(v.str());
  nlohmann::json hstar = nlohmann::json::array();
  for (const auto& v : s.hstar) hstar.push_back(v.str());
  return {{"n", s.n}, {"r_max", s.r_max}, {"values", values}, {"hstar", hstar}};
}

CountSeries series_from_json(const nlohmann::json& j) {
  CountSeries s{j.at("n").get<int>(), j.at("r_max").get<int>(), {}, {}};
  auto big = [](const nlohmann::json& v) {
    return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
  };
  for (const auto& v : j.at("values")) s.values.push_back(big(v));
  for (const auto& v : j.at("hstar")) s.hstar.push_back(big(v));
  return s;
}

std::string series_to_csv(const CountSeries& s) {
  std::string out = "r,H(r)\n";
  for (std::size_t r = 0; r < s.values.size(); ++r)
    out += std::to_string(r) + "," + s.values[r].str() + "\n";
  return out;
}

}  // namespace dihedral
