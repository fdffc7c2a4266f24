#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace dihedral {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

// Scalars compared exactly (integers, rationals) versus with a tolerance (floats).
template <class T>
inline constexpr bool is_inexact_v = std::is_floating_point_v<T> || is_complex<T>::value;

template <class T>
bool scalar_close(const T& a, const T& b, double eps) {
  if constexpr (is_inexact_v<T>) {
    return std::abs(a - b) <= eps;
  } else {
    (void)eps;
    return a == b;
  }
}

// "p/q" with q > 0, always including the denominator.
inline std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

// Binomial coefficient C(a, b); zero when b < 0 or a < b.
BigInt binomial(long long a, long long b);

}  // namespace dihedral
