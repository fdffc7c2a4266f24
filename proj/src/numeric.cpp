#include "dihedral/numeric.hpp"

#include "dihedral/errors.hpp"
#include "dihedral/matrix.hpp"

namespace dihedral {

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParameterError("not a rational: '" + text + "'");
  }
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt acc = 1;
  // acc stays integral: after step i it equals C(a - b + i, i).
  for (long long i = 1; i <= b; ++i) {
    acc *= a - b + i;
    acc /= i;
  }
  return acc;
}

std::size_t exact_rank(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(rank, k));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const Rational factor = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < cols; ++k) m(r, k) -= factor * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace dihedral
