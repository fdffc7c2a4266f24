#pragma once

#include <optional>
#include <string>

#include "dihedral/errors.hpp"
#include "dihedral/matrix.hpp"

namespace dihedral {

// Common row/column sum of m, or nullopt when m is not semi-magic. Exact for
// integer and rational scalars; inexact scalars use the absolute tolerance eps.
template <class T>
std::optional<T> semi_magic_line_sum(const Matrix<T>& m, double eps = kDefaultTolerance) {
  if (!m.is_square()) return std::nullopt;
  if (m.rows() == 0) return T(0);
  const T r = m.row_sum(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!scalar_close(m.row_sum(i), r, eps)) return std::nullopt;
    if (!scalar_close(m.col_sum(i), r, eps)) return std::nullopt;
  }
  return r;
}

template <class T>
bool is_semi_magic(const Matrix<T>& m, double eps = kDefaultTolerance) {
  return semi_magic_line_sum(m, eps).has_value();
}

/// A square matrix whose row and column sums all equal a common line sum.
/// The invariant is checked once at construction; instances are immutable.
template <class T>
class SemiMagicMatrix {
 public:
  explicit SemiMagicMatrix(Matrix<T> entries, double eps = kDefaultTolerance)
      : entries_(std::move(entries)), eps_(eps) {
    auto r = semi_magic_line_sum(entries_, eps);
    if (!r) throw DomainError("matrix is not semi-magic");
    line_sum_ = *r;
  }

  int n() const { return static_cast<int>(entries_.rows()); }
  const Matrix<T>& entries() const { return entries_; }
  const T& line_sum() const { return line_sum_; }
  double tolerance() const { return eps_; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  friend bool operator==(const SemiMagicMatrix& a, const SemiMagicMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Matrix<T> entries_;
  T line_sum_{};
  double eps_;
};

template <class T>
T line_sum(const Matrix<T>& m, double eps = kDefaultTolerance) {
  auto r = semi_magic_line_sum(m, eps);
  if (!r) throw DomainError("line_sum of a matrix that is not semi-magic");
  return *r;
}

template <class T>
SemiMagicMatrix<T> multiply(const SemiMagicMatrix<T>& a, const SemiMagicMatrix<T>& b) {
  if (a.n() != b.n()) throw ParameterError("semi-magic product dimension mismatch");
  return SemiMagicMatrix<T>(a.entries() * b.entries(), std::max(a.tolerance(), b.tolerance()));
}

// All-ones matrix.
template <class T = long long>
SemiMagicMatrix<T> big_j(int n) {
  if (n < 1) throw ParameterError("matrix size must be positive");
  return SemiMagicMatrix<T>(Matrix<T>(n, n, T(1)));
}

// 1 where i + j is even (0-based), else 0. Needs n even.
template <class T = long long>
SemiMagicMatrix<T> j1(int n) {
  if (n < 2 || n % 2 != 0) throw ParameterError("J1 is defined only for even n");
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = T((i + j) % 2 == 0 ? 1 : 0);
  return SemiMagicMatrix<T>(std::move(m));
}

template <class T = long long>
SemiMagicMatrix<T> j2(int n) {
  if (n < 2 || n % 2 != 0) throw ParameterError("J2 is defined only for even n");
  return SemiMagicMatrix<T>(big_j<T>(n).entries() - j1<T>(n).entries());
}

// Dimension of the algebra spanned by the permutation matrices of D_{2n}.
int mm_dimension(int n);

}  // namespace dihedral
