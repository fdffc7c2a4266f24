#include "dihedral/group_algebra.hpp"

#include "dihedral/errors.hpp"
#include "dihedral/permrep.hpp"

namespace dihedral {

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n), coeffs_() {
  require_group_order(n);
  coeffs_.assign(2 * n, Rational(0));
}

GroupAlgebraElement::GroupAlgebraElement(int n, std::vector<Rational> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  require_group_order(n);
  if (coeffs_.size() != static_cast<std::size_t>(2 * n))
    throw ParameterError("group algebra element needs exactly 2n coefficients");
}

GroupAlgebraElement GroupAlgebraElement::basis(const Element& g) {
  GroupAlgebraElement a(g.n());
  a.coeffs_[g.index()] = 1;
  return a;
}

Rational GroupAlgebraElement::coefficient_sum() const {
  Rational acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool GroupAlgebraElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (o.n_ != n_) throw ParameterError("group algebra elements of different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (o.n_ != n_) throw ParameterError("group algebra elements of different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n() != b.n()) throw ParameterError("convolution of elements of different groups");
  const int n = a.n();
  std::vector<Rational> out(2 * n, Rational(0));
  for (int i = 0; i < 2 * n; ++i) {
    if (a.coeffs()[i] == 0) continue;
    const Element g = Element::from_index(n, i);
    for (int k = 0; k < 2 * n; ++k) {
      if (b.coeffs()[k] == 0) continue;
      out[mul(g, Element::from_index(n, k)).index()] += a.coeffs()[i] * b.coeffs()[k];
    }
  }
  return GroupAlgebraElement(n, std::move(out));
}

SemiMagicMatrix<Rational> phi_rho(const GroupAlgebraElement& a) {
  const int n = a.n();
  RationalMatrix m(n, n);
  for (int i = 0; i < 2 * n; ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    const Element g = Element::from_index(n, i);
    for (int col = 0; col < n; ++col) m(perm_matrix_row(g, col), col) += c;
  }
  return SemiMagicMatrix<Rational>(std::move(m));
}

IntMatrix phi_rho_integer(int n, std::span<const long long> coeffs) {
  require_group_order(n);
  if (coeffs.size() != static_cast<std::size_t>(2 * n))
    throw ParameterError("coefficient tuple needs exactly 2n entries");
  IntMatrix m(n, n, 0);
  for (int i = 0; i < 2 * n; ++i) {
    if (coeffs[i] == 0) continue;
    const Element g = Element::from_index(n, i);
    for (int col = 0; col < n; ++col) m(perm_matrix_row(g, col), col) += coeffs[i];
  }
  return m;
}

GroupAlgebraElement character_idempotent(int n, LinearKind chi) {
  std::vector<Rational> coeffs;
  coeffs.reserve(2 * n);
  for (const auto& g : elements(n))
    coeffs.emplace_back(linear_character_value(chi, inv(g)), 2 * n);
  return GroupAlgebraElement(n, std::move(coeffs));
}

LinearKind kernel_second_character(int n) {
  if (n % 2 != 0) throw ParameterError("the second kernel character exists only for even n");
  return (n / 2) % 2 == 0 ? LinearKind::Sgn : LinearKind::DetSgn;
}

KernelBasis kernel_basis(int n) {
  require_group_order(n);
  KernelBasis k{{character_idempotent(n, LinearKind::Det)}, n % 2 == 1 ? 1 : 2};
  if (n % 2 == 0) k.vectors.push_back(character_idempotent(n, kernel_second_character(n)));
  return k;
}

int phi_rank(int n) {
  require_group_order(n);
  RationalMatrix rows(2 * n, n * n);
  for (const auto& g : elements(n))
    for (int col = 0; col < n; ++col) rows(g.index(), perm_matrix_row(g, col) * n + col) = 1;
  return static_cast<int>(exact_rank(std::move(rows)));
}

}  // namespace dihedral
