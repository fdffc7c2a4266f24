#include "dihedral/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "dihedral/errors.hpp"
#include "dihedral/group_algebra.hpp"
#include "dihedral/permrep.hpp"

namespace dihedral {

namespace {

// Angle 2 pi num / n with num reduced first; trig values are never built by recurrence.
double angle(long long num, int n) {
  long long r = num % n;
  if (r < 0) r += n;
  return 2.0 * std::numbers::pi * static_cast<double>(r) / n;
}

const Complex kI{0.0, 1.0};

}  // namespace

IrreducibleLabel chi_prime(int n) {
  if (n % 2 != 0) throw ParameterError("chi' exists only for even n");
  return IrreducibleLabel::linear((n / 2) % 2 == 1 ? LinearKind::Sgn : LinearKind::DetSgn);
}

int pi2_max_j(int n) {
  require_group_order(n);
  return n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
}

void require_pi2_index(int n, int j) {
  if (j < 1 || j > pi2_max_j(n))
    throw ParameterError("j=" + std::to_string(j) + " is outside 1.." + std::to_string(pi2_max_j(n)) +
                         " for n=" + std::to_string(n));
}

ComplexMatrix complex_perm_matrix(const Element& g) { return perm_matrix(g).as<Complex>(); }

ComplexMatrix circulant_idempotent(int n, int j) {
  require_group_order(n);
  if (j < 0 || j >= n) throw ParameterError("circulant idempotent index must satisfy 0 <= j < n");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      m(i, k) = std::polar(1.0, angle(static_cast<long long>(j) * (k - i), n)) / static_cast<double>(n);
  return m;
}

ComplexMatrix project_isotypic(int n, const IrreducibleLabel& label) {
  if (!is_irreducible_of(n, label))
    throw ParameterError(label.str() + " is not an irreducible of D_" + std::to_string(2 * n));
  ComplexMatrix acc(n, n);
  for (const auto& s : elements(n)) {
    const double weight = character_value(label, inv(s));
    if (weight == 0.0) continue;
    for (int col = 0; col < n; ++col) acc(perm_matrix_row(s, col), col) += weight;
  }
  return acc * Complex(static_cast<double>(label.dimension()) / (2.0 * n), 0.0);
}

ComplexMatrix u_pi2(int n, int j) {
  require_pi2_index(n, j);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      m(i, k) = 2.0 / n * std::cos(angle(static_cast<long long>(j) * (k - i), n));
  return m;
}

ComplexMatrix u_prime(int n, int j) {
  require_pi2_index(n, j);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      m(i, k) = 2.0 / n * std::sin(angle(static_cast<long long>(j) * (k - i), n));
  return m;
}

ComplexMatrix u_chi_prime(int n) {
  require_group_order(n);
  if (n % 2 != 0) throw ParameterError("U_chi' exists only for even n");
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = ((i + k) % 2 == 0 ? 1.0 : -1.0) / n;
  return m;
}

IdempotentSet idempotent_set(int n, double eps) {
  require_group_order(n);
  IdempotentSet set{n, {}, eps};
  ComplexMatrix triv(n, n, Complex(1.0 / n, 0.0));
  set.members.emplace_back(IrreducibleLabel::linear(LinearKind::Triv),
                           SemiMagicMatrix<Complex>(std::move(triv), eps));
  if (n % 2 == 0)
    set.members.emplace_back(chi_prime(n), SemiMagicMatrix<Complex>(u_chi_prime(n), eps));
  for (int j = 1; j <= pi2_max_j(n); ++j)
    set.members.emplace_back(IrreducibleLabel::pi2(j), SemiMagicMatrix<Complex>(u_pi2(n, j), eps));
  return set;
}

Eigenbasis eigenbasis(int n, int j) {
  require_pi2_index(n, j);
  Eigenbasis b;
  const double scale = std::sqrt(2.0 / n);
  const double unit = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = angle(static_cast<long long>(j) * k, n);
    b.u.emplace_back(scale * std::cos(theta), 0.0);
    b.v.emplace_back(scale * std::sin(theta), 0.0);
    b.w_pos.push_back(std::polar(unit, theta));
    b.w_neg.push_back(std::polar(unit, -theta));
  }
  return b;
}

QuaternionBasis quaternion_basis(int n, int j) {
  require_pi2_index(n, j);
  const ComplexMatrix pc = complex_perm_matrix(Element::reflection(n, 0));
  const ComplexMatrix u = u_pi2(n, j);
  const ComplexMatrix up = u_prime(n, j);
  return {n, j, u, kI * (pc * u), up, kI * (pc * up)};
}

double QuaternionResidual::worst() const { return std::max({unit, squares, triple}); }

QuaternionResidual quaternion_residual(const QuaternionBasis& q) {
  QuaternionResidual res{0.0, 0.0, 0.0};
  for (const ComplexMatrix* t : {&q.q1, &q.q2, &q.q3, &q.q4}) {
    res.unit = std::max(res.unit, max_abs_diff(q.q1 * *t, *t));
    res.unit = std::max(res.unit, max_abs_diff(*t * q.q1, *t));
  }
  for (const ComplexMatrix* t : {&q.q2, &q.q3, &q.q4})
    res.squares = std::max(res.squares, max_abs(*t * *t + q.q1));
  res.triple = max_abs(q.q2 * q.q3 * q.q4 + q.q1);
  return res;
}

std::vector<std::pair<std::string, int>> ideal_dimensions(int n) {
  require_group_order(n);
  std::vector<std::pair<std::string, int>> dims{{"triv", 1}};
  if (n % 2 == 0) dims.emplace_back("chi'", 1);
  for (int j = 1; j <= pi2_max_j(n); ++j) dims.emplace_back(IrreducibleLabel::pi2(j).str(), 4);
  int total = 0;
  for (const auto& [label, d] : dims) total += d;
  if (total != phi_rank(n))
    throw std::logic_error("ideal dimensions do not add up to the rank of the permutation map");
  return dims;
}

int projector_rank(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(e).singularValues();
  return static_cast<int>((sv.array() > 0.5).count());
}

}  // namespace dihedral
