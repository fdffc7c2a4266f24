#pragma once

#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/matrix.hpp"

namespace dihedral {

/// A permutation of the polygon vertices {1, ..., n}; image[i - 1] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int vertex) const { return image_.at(vertex - 1); }
  const std::vector<int>& image() const { return image_; }
  int fixed_points() const;
  // +1 / -1 by inversion count.
  int sign() const;

  // (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// 0/1 matrix with column i holding its single 1 in row sigma(i).
class PermutationMatrix {
 public:
  explicit PermutationMatrix(const Permutation& sigma);

  int n() const { return static_cast<int>(entries_.rows()); }
  const IntMatrix& entries() const { return entries_; }

  template <class T>
  Matrix<T> as() const {
    return entries_.map<T>([](long long x) { return T(x); });
  }

  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  IntMatrix entries_;
};

// R: i -> i + 1 (mod n), C: i -> n + 1 - i; C^c R^k applies R^k first.
Permutation to_permutation(const Element& a);
PermutationMatrix perm_matrix(const Element& a);

// Row index (0-based) of the 1 in column `col` of P_a, without building the matrix.
int perm_matrix_row(const Element& a, int col);

template <class T>
bool is_circulant(const Matrix<T>& m, double eps = 0.0) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!scalar_close(m(i, j), m((i + n - j) % n, 0), eps)) return false;
  return true;
}

// (-1)-circulant: entries depend only on (i + j) mod n.
template <class T>
bool is_anticirculant(const Matrix<T>& m, double eps = 0.0) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!scalar_close(m(i, j), m((i + j) % n, 0), eps)) return false;
  return true;
}

}  // namespace dihedral
