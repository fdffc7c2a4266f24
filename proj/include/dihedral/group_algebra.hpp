#pragma once

#include <span>
#include <vector>

#include "dihedral/group.hpp"
#include "dihedral/magic.hpp"
#include "dihedral/numeric.hpp"

namespace dihedral {

/// An element of C[D_{2n}] with rational coefficients, indexed by the basis
/// order e, R, ..., R^{n-1}, C, CR, ..., CR^{n-1}.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n);  // zero
  GroupAlgebraElement(int n, std::vector<Rational> coeffs);

  static GroupAlgebraElement basis(const Element& g);
  static GroupAlgebraElement unit(int n) { return basis(Element::identity(n)); }

  int n() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](const Element& g) const { return coeffs_.at(g.index()); }
  Rational coefficient_sum() const;
  bool is_zero() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Rational& s);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }
  friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

// Bilinear extension of e_g e_h = e_{gh}.
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// sum_g a_g P_g.
SemiMagicMatrix<Rational> phi_rho(const GroupAlgebraElement& a);

// Integer fast path of phi_rho for coefficient tuples in basis order.
IntMatrix phi_rho_integer(int n, std::span<const long long> coeffs);

// (1/2n) sum_g chi(g^{-1}) e_g.
GroupAlgebraElement character_idempotent(int n, LinearKind chi);

struct KernelBasis {
  std::vector<GroupAlgebraElement> vectors;
  int expected_dim;  // 1 for odd n, 2 for even n
};

// e_det, plus e_{chi''} for n = 2m with chi'' = sgn (m even) or det*sgn (m odd).
KernelBasis kernel_basis(int n);

// The linear character chi'' above; n must be even.
LinearKind kernel_second_character(int n);

// Exact rank of the 2n vectorized permutation matrices.
int phi_rank(int n);

}  // namespace dihedral
