#include "dihedral/export.hpp"

#include <cmath>
#include <cstdio>

#include "dihedral/errors.hpp"

namespace dihedral {

std::string format_real(double x, int precision) {
  if (precision < 1) throw ParameterError("precision must be >= 1");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  std::string s(buf);
  // "-0.000" -> "0.000"
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_complex(const Complex& z, int precision) {
  const std::string re = format_real(z.real(), precision);
  std::string im = format_real(z.imag(), precision);
  if (im[0] == '-') return re + "-" + im.substr(1) + "i";
  return re + "+" + im + "i";
}

json scalar_to_json(long long x) { return x; }
json scalar_to_json(const Rational& x) { return rational_to_string(x); }
json scalar_to_json(const Complex& x) { return json::array({x.real(), x.imag()}); }

template <>
long long scalar_from_json<long long>(const json& j) {
  if (!j.is_number_integer()) throw ParameterError("expected an integer matrix entry");
  return j.get<long long>();
}

template <>
Rational scalar_from_json<Rational>(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParameterError("expected a \"p/q\" string matrix entry");
  return parse_rational(j.get<std::string>());
}

template <>
Complex scalar_from_json<Complex>(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParameterError("expected a [re, im] matrix entry");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string format_cell(long long x, int) { return std::to_string(x); }
std::string format_cell(const Rational& x, int) { return rational_to_string(x); }
std::string format_cell(const Complex& x, int precision) { return format_complex(x, precision); }

}  // namespace dihedral
