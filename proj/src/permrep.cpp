#include "dihedral/permrep.hpp"

#include <string>

#include "dihedral/errors.hpp"

namespace dihedral {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > n() || seen[v - 1])
      throw ParameterError("permutation image is not a bijection on {1..n}");
    seen[v - 1] = true;
  }
}

int Permutation::fixed_points() const {
  int count = 0;
  for (int i = 1; i <= n(); ++i) count += (*this)(i) == i;
  return count;
}

int Permutation::sign() const {
  int inversions = 0;
  for (int i = 0; i < n(); ++i)
    for (int k = i + 1; k < n(); ++k) inversions += image_[i] > image_[k];
  return inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.n() != n()) throw ParameterError("permutation sizes differ");
  std::vector<int> out(image_.size());
  for (int i = 1; i <= n(); ++i) out[i - 1] = (*this)(other(i));
  return Permutation(std::move(out));
}

int perm_matrix_row(const Element& a, int col) {
  const int n = a.n();
  int v = (col + a.rot()) % n;
  if (a.reflected()) v = n - 1 - v;
  return v;
}

Permutation to_permutation(const Element& a) {
  std::vector<int> image(a.n());
  for (int i = 0; i < a.n(); ++i) image[i] = perm_matrix_row(a, i) + 1;
  return Permutation(std::move(image));
}

PermutationMatrix::PermutationMatrix(const Permutation& sigma)
    : entries_(sigma.n(), sigma.n(), 0) {
  for (int i = 1; i <= sigma.n(); ++i) entries_(sigma(i) - 1, i - 1) = 1;
}

PermutationMatrix perm_matrix(const Element& a) { return PermutationMatrix(to_permutation(a)); }

}  // namespace dihedral
