#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dihedral/errors.hpp"
#include "dihedral/group_algebra.hpp"
#include "dihedral/permrep.hpp"
#include "dihedral/spectral.hpp"

using namespace dihedral;

namespace {

constexpr double kTight = 1e-12;
constexpr double kLoose = 1e-9;
const Complex I(0.0, 1.0);

ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows, Complex scale) {
  std::vector<std::vector<Complex>> data;
  for (const auto& r : rows) {
    data.emplace_back();
    for (double x : r) data.back().push_back(scale * x);
  }
  ComplexMatrix m(data.size(), data.front().size());
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t k = 0; k < data[i].size(); ++k) m(i, k) = data[i][k];
  return m;
}

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_diff(a, b); }

double norm(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vdiff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<Complex> scaled(std::vector<Complex> v, double s) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

TEST(CirculantIdempotent, TrivialIsAverage) {
  EXPECT_LT(diff(circulant_idempotent(3, 0), ComplexMatrix(3, 3, Complex(1.0 / 3.0))), kTight);
}

TEST(CirculantIdempotent, N4J2Checkerboard) {
  const auto u = circulant_idempotent(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(u(i, k) - Complex((k - i) % 2 ? -0.25 : 0.25)), kTight);
}

TEST(CirculantIdempotent, SumIsIdentity) {
  ComplexMatrix s(5, 5);
  for (int j = 0; j < 5; ++j) s += circulant_idempotent(5, j);
  EXPECT_LT(diff(s, ComplexMatrix::identity(5)), kLoose);
  EXPECT_THROW(circulant_idempotent(5, 5), ParameterError);
}

TEST(ProjectIsotypic, Examples) {
  EXPECT_LT(diff(project_isotypic(5, IrreducibleLabel::parse("triv")), ComplexMatrix(5, 5, Complex(0.2))), kTight);
  const auto q1 = real_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, 1.0 / 3.0);
  EXPECT_LT(diff(project_isotypic(3, IrreducibleLabel::pi2(1)), q1), kTight);
  EXPECT_LT(max_abs(project_isotypic(5, IrreducibleLabel::parse("det"))), kTight);
  EXPECT_THROW(project_isotypic(5, IrreducibleLabel::parse("sgn")), ParameterError);
}

TEST(IdempotentSet, Examples) {
  EXPECT_EQ(idempotent_set(3).members.size(), 2u);
  const auto s4 = idempotent_set(4);
  ASSERT_EQ(s4.members.size(), 3u);
  EXPECT_EQ(s4.members[0].first.str(), "triv");
  EXPECT_EQ(s4.members[1].first, chi_prime(4));
  EXPECT_EQ(s4.members[2].first, IrreducibleLabel::pi2(1));
  const auto& chi = s4.members[1].second.entries();
  for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(chi(0, k) - Complex(k % 2 ? -0.25 : 0.25)), kTight);
}

TEST(ChiPrime, DependsOnHalfParity) {
  EXPECT_EQ(chi_prime(4).str(), "det*sgn");
  EXPECT_EQ(chi_prime(6).str(), "sgn");
  EXPECT_THROW(chi_prime(5), ParameterError);
}

TEST(Eigenbasis, N4J1) {
  const auto b = eigenbasis(4, 1);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LT(vdiff(b.u, {h, 0, -h, 0}), kTight);
  EXPECT_LT(vdiff(b.v, {0, h, 0, -h}), kTight);
  EXPECT_THROW(eigenbasis(4, 2), ParameterError);
  EXPECT_THROW(eigenbasis(5, 0), ParameterError);
}

TEST(UPrime, N3Reference) {
  const auto expected = real_matrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, std::sqrt(3.0) / 3.0);
  EXPECT_LT(diff(u_prime(3, 1), expected), kTight);
}

TEST(UPrime, SquareIsMinusU) {
  EXPECT_LT(diff(u_prime(5, 1) * u_prime(5, 1), u_pi2(5, 1) * Complex(-1.0)), kLoose);
}

TEST(Quaternion, N3Reference) {
  const auto q = quaternion_basis(3, 1);
  const double s = std::sqrt(3.0) / 3.0;
  EXPECT_LT(diff(q.q1, real_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, 1.0 / 3.0)), kTight);
  EXPECT_LT(diff(q.q2, real_matrix({{-1, -1, 2}, {-1, 2, -1}, {2, -1, -1}}, I / 3.0)), kTight);
  EXPECT_LT(diff(q.q3, real_matrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, s)), kTight);
  EXPECT_LT(diff(q.q4, real_matrix({{1, -1, 0}, {-1, 0, 1}, {0, 1, -1}}, I * s)), kTight);
}

TEST(Quaternion, N4Reference) {
  const auto q = quaternion_basis(4, 1);
  EXPECT_LT(diff(q.q1, real_matrix({{1, 0, -1, 0}, {0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}}, 0.5)), kTight);
  EXPECT_LT(diff(q.q2, real_matrix({{0, -1, 0, 1}, {-1, 0, 1, 0}, {0, 1, 0, -1}, {1, 0, -1, 0}}, I / 2.0)), kTight);
  EXPECT_LT(diff(q.q3, real_matrix({{0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 0, -1, 0}}, 0.5)), kTight);
  EXPECT_LT(diff(q.q4, real_matrix({{1, 0, -1, 0}, {0, -1, 0, 1}, {-1, 0, 1, 0}, {0, 1, 0, -1}}, I / 2.0)), kTight);
}

TEST(Quaternion, RelationsN5J2) {
  const auto q = quaternion_basis(5, 2);
  EXPECT_LT(max_abs(q.q2 * q.q3 * q.q4 + q.q1), kLoose);
  EXPECT_LT(quaternion_residual(q).worst(), kLoose);
}

TEST(IdealDimensions, Examples) {
  using V = std::vector<std::pair<std::string, int>>;
  EXPECT_EQ(ideal_dimensions(3), (V{{"triv", 1}, {"pi2(1)", 4}}));
  EXPECT_EQ(ideal_dimensions(4), (V{{"triv", 1}, {"chi'", 1}, {"pi2(1)", 4}}));
  int total = 0;
  for (const auto& [l, d] : ideal_dimensions(7)) total += d;
  EXPECT_EQ(total, 13);
}

class SpectralInvariants : public ::testing::TestWithParam<int> {};

TEST_P(SpectralInvariants, CompleteOrthogonalIdempotents) {
  const int n = GetParam();
  const auto set = idempotent_set(n);
  EXPECT_EQ(set.members.size(), static_cast<std::size_t>(n % 2 ? (n + 1) / 2 : n / 2 + 1));
  ComplexMatrix sum(n, n);
  for (std::size_t a = 0; a < set.members.size(); ++a) {
    const auto& ua = set.members[a].second.entries();
    sum += ua;
    EXPECT_LT(diff(ua * ua, ua), kLoose);
    for (std::size_t b = 0; b < set.members.size(); ++b)
      if (a != b) EXPECT_LT(max_abs(ua * set.members[b].second.entries()), kLoose);
  }
  EXPECT_LT(diff(sum, ComplexMatrix::identity(n)), kLoose);
}

TEST_P(SpectralInvariants, MembersSymmetricCirculantWithExpectedLineSums) {
  const int n = GetParam();
  for (const auto& [label, m] : idempotent_set(n).members) {
    EXPECT_LT(diff(m.entries(), m.entries().transpose()), kTight);
    EXPECT_TRUE(is_circulant(m.entries(), kTight));
    const double target = label.str() == "triv" ? 1.0 : 0.0;
    EXPECT_LT(std::abs(m.line_sum() - Complex(target)), kTight) << label.str();
    EXPECT_EQ(projector_rank(m.entries()), label.dimension());
  }
}

TEST_P(SpectralInvariants, MembersAreCentral) {
  const int n = GetParam();
  for (const auto& [label, m] : idempotent_set(n).members)
    for (const auto& g : elements(n)) {
      const auto p = complex_perm_matrix(g);
      EXPECT_LT(diff(p * m.entries(), m.entries() * p), kTight) << label.str() << " " << g.word();
    }
}

TEST_P(SpectralInvariants, Pi2IsSumOfConjugateCirculants) {
  const int n = GetParam();
  for (int j = 1; j <= pi2_max_j(n); ++j) {
    EXPECT_LT(diff(u_pi2(n, j), circulant_idempotent(n, j) + circulant_idempotent(n, n - j)), kTight);
    EXPECT_LT(diff(u_pi2(n, j), project_isotypic(n, IrreducibleLabel::pi2(j))), kTight);
  }
}

TEST_P(SpectralInvariants, ReflectionConjugation) {
  const int n = GetParam();
  const auto pc = complex_perm_matrix(Element::reflection(n));
  for (int j = 1; j <= pi2_max_j(n); ++j) {
    EXPECT_LT(diff(pc * u_pi2(n, j) * pc, u_pi2(n, j)), kTight);
    EXPECT_LT(diff(pc * u_prime(n, j) * pc, u_prime(n, j) * Complex(-1.0)), kTight);
  }
}

TEST_P(SpectralInvariants, UPrimeAlgebra) {
  const int n = GetParam();
  for (int j = 1; j <= pi2_max_j(n); ++j) {
    const auto u = u_pi2(n, j), up = u_prime(n, j);
    EXPECT_LT(diff(up.transpose(), up * Complex(-1.0)), kTight);
    EXPECT_LT(diff(u * up, up), kLoose);
    EXPECT_LT(diff(up * u, up), kLoose);
    EXPECT_LT(diff(up * up, u * Complex(-1.0)), kLoose);
  }
}

TEST_P(SpectralInvariants, QuaternionRelations) {
  const int n = GetParam();
  for (int j = 1; j <= pi2_max_j(n); ++j) {
    const auto q = quaternion_basis(n, j);
    const auto res = quaternion_residual(q);
    EXPECT_LT(res.worst(), kLoose) << j;
    EXPECT_LT(max_abs(q.q2 * q.q2 + q.q1), kLoose);
  }
}

TEST_P(SpectralInvariants, EigenbasisProperties) {
  const int n = GetParam();
  const auto prc = complex_perm_matrix(mul(Element::rotation(n), Element::reflection(n)));
  const auto pr = complex_perm_matrix(Element::rotation(n));
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / n);
  for (int j = 1; j <= pi2_max_j(n); ++j) {
    const auto b = eigenbasis(n, j);
    const auto u = u_pi2(n, j);
    EXPECT_NEAR(norm(b.u), 1.0, kLoose);
    EXPECT_NEAR(norm(b.v), 1.0, kLoose);
    EXPECT_LT(std::abs(dot(b.u, b.v)), kLoose);
    EXPECT_LT(vdiff(prc * b.u, b.u), kLoose);
    EXPECT_LT(vdiff(prc * b.v, scaled(b.v, -1.0)), kLoose);
    EXPECT_LT(vdiff(u * b.u, b.u), kLoose);
    EXPECT_LT(vdiff(u * b.v, b.v), kLoose);
    std::vector<Complex> expected = b.w_pos;
    for (auto& x : expected) x *= std::pow(w, -j);
    EXPECT_LT(vdiff(pr * b.w_pos, expected), kLoose);
  }
}

TEST_P(SpectralInvariants, IdealDimensionsMatchExactRank) {
  const int n = GetParam();
  int total = 0;
  for (const auto& [l, d] : ideal_dimensions(n)) total += d;
  EXPECT_EQ(total, phi_rank(n));
}

INSTANTIATE_TEST_SUITE_P(UpTo12, SpectralInvariants, ::testing::Range(3, 13));
