#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dihedral/characters.hpp"
#include "dihedral/magic.hpp"
#include "dihedral/matrix.hpp"

namespace dihedral {

// Label of the extra one-dimensional idempotent for n = 2m: sgn for m odd,
// det*sgn for m even.
IrreducibleLabel chi_prime(int n);

// Valid two-dimensional parameters j for D_{2n}.
int pi2_max_j(int n);
void require_pi2_index(int n, int j);

// (1/n) sum_k w^{-jk} P_{R^k}; entry (i, k) is w^{j(k - i)} / n, w = e^{2 pi i / n}.
ComplexMatrix circulant_idempotent(int n, int j);

// (d/2n) sum_s chi(s^{-1}) P_s for an irreducible of D_{2n}.
ComplexMatrix project_isotypic(int n, const IrreducibleLabel& label);

// (2/n) sum_k cos(2 k j pi / n) P_{R^k}.
ComplexMatrix u_pi2(int n, int j);
// Entry (i, k) is (2/n) sin(2 (k - i) j pi / n): twice the imaginary part of U_{chi_j}.
ComplexMatrix u_prime(int n, int j);
// The +-1/n checkerboard; n even.
ComplexMatrix u_chi_prime(int n);

struct IdempotentSet {
  int n;
  std::vector<std::pair<IrreducibleLabel, SemiMagicMatrix<Complex>>> members;
  double tolerance;
};

/// Complete set of central orthogonal idempotents of the permutation algebra:
/// U_triv, U_{chi'} (even n only), then U_{pi2(j)} for each valid j.
IdempotentSet idempotent_set(int n, double eps = kDefaultTolerance);

struct Eigenbasis {
  std::vector<Complex> u, v, w_pos, w_neg;
};

Eigenbasis eigenbasis(int n, int j);

struct QuaternionBasis {
  int n, j;
  ComplexMatrix q1, q2, q3, q4;
};

// q1 = U, q2 = i P_C U, q3 = U', q4 = i P_C U'.
QuaternionBasis quaternion_basis(int n, int j);

struct QuaternionResidual {
  double unit;  // max over t of |q1 q_t - q_t|, |q_t q1 - q_t|
  double squares;  // max of |q2^2 + q1|, |q3^2 + q1|, |q4^2 + q1|
  double triple;  // |q2 q3 q4 + q1|
  double worst() const;
};

QuaternionResidual quaternion_residual(const QuaternionBasis& q);

// Two-sided ideal dimensions: triv -> 1, chi' -> 1 (even n), pi2(j) -> 4.
// The total is cross-checked against the exact rank of the permutation map.
std::vector<std::pair<std::string, int>> ideal_dimensions(int n);

// Number of singular values above 1/2.
int projector_rank(const ComplexMatrix& m);

// Complex copy of the permutation matrix of g.
ComplexMatrix complex_perm_matrix(const Element& g);

}  // namespace dihedral
