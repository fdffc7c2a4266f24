#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dihedral/numeric.hpp"

namespace dihedral {

inline constexpr std::uint64_t kDefaultMaxTuples = 10'000'000;

/// Number of semi-magic squares with line sum r in the algebra spanned by the
/// permutation matrices of D_{2n}, by the binomial closed forms.
BigInt count_closed(int n, long long r);

struct CountSeries {
  int n;
  int r_max;
  std::vector<BigInt> values;  // H(0..r_max)
  std::vector<BigInt> hstar;   // reduced numerator, constant term first

  friend bool operator==(const CountSeries&, const CountSeries&) = default;
};

// Numerator of the generating function before reduction: 1 - x^n (odd n),
// (1 - x^m)^2 (n = 2m). The denominator is (1 - x)^{2n}.
std::vector<BigInt> generating_numerator(int n);

// Coefficients by formal power-series division, not by binomials.
CountSeries series(int n, int r_max);

// Odd n only: sum_{i=0}^{n-1} C(r + 2n - 2 - i, 2n - 2).
BigInt count_sum_formula(int n, long long r);
// Odd n only: sum_{i=1}^{n} (-1)^{i+1} C(n, i) C(r + 2n - 1 - i, 2n - 1 - i).
BigInt count_pie(int n, long long r);
// Even n = 2m only: sum_{s=0}^{r} h(s) h(r - s) with h the odd-shape count at m.
BigInt count_convolution(int n, long long r);

// Number of weak compositions of r into 2n parts.
BigInt tuple_count(int n, long long r);

// Brute force: push every 2n-tuple of non-negative integers summing to r
// through the permutation map and count the distinct matrices.
BigInt oracle_count(int n, long long r, std::uint64_t max_tuples = kDefaultMaxTuples);

// Brute force over tuples in normal form: odd n needs a zero among the
// reflection coordinates; even n needs a zero among the odd reflections and
// one among the even reflections.
BigInt oracle_canonical(int n, long long r, std::uint64_t max_tuples = kDefaultMaxTuples);

/// Polynomial in one variable over the rationals, constant term first.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  // x + c
  static RationalPolynomial linear(const Rational& c) { return RationalPolynomial({c, 1}); }
  // C(x + a, b) = (x + a)(x + a - 1)...(x + a - b + 1) / b!
  static RationalPolynomial binomial_in_x(long long a, long long b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator()(const Rational& x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& s);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// count_closed with every binomial expanded as a polynomial in r.
RationalPolynomial count_polynomial(int n);

struct EhrhartReport {
  int n;
  int degree;
  int expected_degree;
  bool matches_counts;  // polynomial equals count_closed on r = 0..2n
  bool reciprocity;     // H(-r) = (-1)^{n-1} H(r - n), r = 0..2n
  bool vanishing;       // H(-1) = ... = H(-(n-1)) = 0
  bool hstar_positive;
  bool hstar_symmetric;
  bool hstar_unimodal;

  bool ok() const {
    return degree == expected_degree && matches_counts && reciprocity && vanishing &&
           hstar_positive && hstar_symmetric && hstar_unimodal;
  }
};

EhrhartReport check_ehrhart_properties(int n);

// {n, r_max, values[], hstar[]}; big integers are decimal strings.
nlohmann::json series_to_json(const CountSeries& s);
CountSeries series_from_json(const nlohmann::json& j);
// "r,H(r)" header, then one row per r.
std::string series_to_csv(const CountSeries& s);

}  // namespace dihedral
