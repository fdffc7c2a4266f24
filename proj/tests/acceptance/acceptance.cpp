// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dihedral/characters.hpp"
#include "dihedral/counting.hpp"
#include "dihedral/group_algebra.hpp"
#include "dihedral/magic.hpp"
#include "dihedral/permrep.hpp"
#include "dihedral/spectral.hpp"

using namespace dihedral;

namespace {

// Tolerances, fixed here rather than read from the environment.
constexpr double kEps = 1e-9;
constexpr double kTight = 1e-12;
constexpr double kCountingBudgetSeconds = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string nr(int n, long long r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

Outcome counting_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  auto check = [&](int n, int r) {
    const BigInt c = count_closed(n, r);
    o.require(oracle_count(n, r) == c, "oracle_count differs at " + nr(n, r));
    o.require(oracle_canonical(n, r) == c, "oracle_canonical differs at " + nr(n, r));
  };
  for (int n : {3, 5, 7})
    for (int r = 0; r <= 8; ++r) check(n, r);
  for (int n : {4, 6})
    for (int r = 0; r <= 6; ++r) check(n, r);
  o.require(count_closed(3, 1) == 6 && count_closed(3, 2) == 21 && count_closed(3, 3) == 55 &&
                count_closed(4, 1) == 8 && count_closed(4, 2) == 34,
            "spot values");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < kCountingBudgetSeconds, "took " + std::to_string(secs) + " s");
  if (o.ok) {
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << secs << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome formula_concordance() {
  Outcome o;
  for (int n : {3, 5, 7, 9})
    for (int r = 0; r <= 20; ++r) {
      o.require(count_sum_formula(n, r) == count_closed(n, r), "sum formula at " + nr(n, r));
      o.require(count_pie(n, r) == count_closed(n, r), "inclusion-exclusion at " + nr(n, r));
    }
  for (int n : {4, 6, 8})
    for (int r = 0; r <= 20; ++r)
      o.require(count_convolution(n, r) == count_closed(n, r), "convolution at " + nr(n, r));
  return o;
}

bool symmetric_unimodal(const std::vector<BigInt>& h) {
  if (h.empty()) return false;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] <= 0 || h[i] != h[h.size() - 1 - i]) return false;
  for (std::size_t i = 1; i <= (h.size() - 1) / 2; ++i)
    if (h[i] < h[i - 1]) return false;
  return true;
}

Outcome hstar_vectors() {
  Outcome o;
  o.require(series(3, 0).hstar == std::vector<BigInt>{1, 1, 1}, "n=3");
  o.require(series(4, 0).hstar == std::vector<BigInt>{1, 2, 1}, "n=4");
  for (int n : {3, 5, 7, 9}) o.require(series(n, 0).hstar == std::vector<BigInt>(n, 1), "odd n=" + std::to_string(n));
  for (int n : {6, 8}) {
    const int m = n / 2;
    const auto h = series(n, 0).hstar;
    std::vector<BigInt> expected;
    for (int i = 0; i <= 2 * m - 2; ++i) expected.emplace_back(std::min(i, 2 * m - 2 - i) + 1);
    o.require(h == expected && symmetric_unimodal(h), "even n=" + std::to_string(n));
  }
  return o;
}

Outcome ehrhart() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    const auto p = count_polynomial(n);
    const int deg = n % 2 ? 2 * n - 2 : 2 * n - 3;
    o.require(p.degree() == deg, "degree at n=" + std::to_string(n));
    const Rational sign = (n - 1) % 2 ? -1 : 1;
    for (int r = 0; r <= 2 * n; ++r) o.require(p(Rational(-r)) == sign * p(Rational(r - n)), "reciprocity at " + nr(n, r));
    for (int r = 1; r <= n - 1; ++r) o.require(p(Rational(-r)) == 0, "vanishing at " + nr(n, -r));
    o.require(check_ehrhart_properties(n).ok(), "library report at n=" + std::to_string(n));
  }
  return o;
}

Outcome kernel_rank() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    o.require(phi_rank(n) == (n % 2 ? 2 * n - 1 : 2 * n - 2), "rank at n=" + std::to_string(n));
    for (const auto& v : kernel_basis(n).vectors)
      o.require(!v.is_zero() && phi_rho(v).entries() == RationalMatrix(n, n), "kernel vector at n=" + std::to_string(n));
  }
  return o;
}

Outcome character_tables() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    const auto t = character_table(n);
    const auto irr = irreducibles(n);
    int dims = 0;
    for (const auto& a : irr) {
      dims += a.dimension() * a.dimension();
      for (const auto& b : irr) {
        const Complex ip = inner_product(t, a.str(), b.str());
        o.require(std::abs(ip - Complex(a == b ? 1.0 : 0.0)) < kEps, "orthonormality at n=" + std::to_string(n));
      }
    }
    o.require(dims == 2 * n, "sum of d^2 at n=" + std::to_string(n));
    // rho = triv + chi' (even) + every pi2.
    for (const auto& [label, k] : decompose_rho(n)) {
      int expected = 0;
      if (label.kind == IrreducibleLabel::Kind::Triv || label.kind == IrreducibleLabel::Kind::Pi2) expected = 1;
      if (n % 2 == 0 && label == chi_prime(n)) expected = 1;
      o.require(k == expected, "multiplicity of " + label.str() + " at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome idempotent_suite() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    const auto set = idempotent_set(n);
    const std::string at = " at n=" + std::to_string(n);
    o.require(set.members.size() == static_cast<std::size_t>(n % 2 ? (n + 1) / 2 : n / 2 + 1), "member count" + at);
    ComplexMatrix sum(n, n);
    for (std::size_t a = 0; a < set.members.size(); ++a) {
      const auto& [label, sm] = set.members[a];
      const auto& u = sm.entries();
      sum += u;
      o.require(max_abs_diff(u * u, u) < kEps, "idempotency of " + label.str() + at);
      for (std::size_t b = 0; b < set.members.size(); ++b)
        if (a != b) o.require(max_abs(u * set.members[b].second.entries()) < kEps, "orthogonality" + at);
      o.require(max_abs_diff(u, u.transpose()) < kTight, "symmetry of " + label.str() + at);
      o.require(is_circulant(u, kTight), "circulant " + label.str() + at);
      const double line = label.str() == "triv" ? 1.0 : 0.0;
      o.require(is_semi_magic(u, kTight) && std::abs(sm.line_sum() - Complex(line)) < kTight,
                "line sum of " + label.str() + at);
    }
    o.require(max_abs_diff(sum, ComplexMatrix::identity(n)) < kEps, "completeness" + at);
  }
  return o;
}

ComplexMatrix reference(std::initializer_list<std::initializer_list<double>> rows, Complex scale) {
  ComplexMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t k = 0;
    for (double x : r) m(i, k++) = scale * x;
    ++i;
  }
  return m;
}

Outcome quaternions() {
  Outcome o;
  for (auto [n, j] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}}) {
    const auto q = quaternion_basis(n, j);
    const std::string at = " at (" + std::to_string(n) + "," + std::to_string(j) + ")";
    o.require(max_abs(q.q2 * q.q2 + q.q1) < kEps, "q2^2" + at);
    o.require(max_abs(q.q3 * q.q3 + q.q1) < kEps, "q3^2" + at);
    o.require(max_abs(q.q4 * q.q4 + q.q1) < kEps, "q4^2" + at);
    o.require(max_abs(q.q2 * q.q3 * q.q4 + q.q1) < kEps, "q2 q3 q4" + at);
  }
  const Complex i(0.0, 1.0);
  const double s = std::sqrt(3.0) / 3.0;
  const auto q3 = quaternion_basis(3, 1);
  o.require(max_abs_diff(q3.q1, reference({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, 1.0 / 3.0)) < kTight &&
                max_abs_diff(q3.q2, reference({{-1, -1, 2}, {-1, 2, -1}, {2, -1, -1}}, i / 3.0)) < kTight &&
                max_abs_diff(q3.q3, reference({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, s)) < kTight &&
                max_abs_diff(q3.q4, reference({{1, -1, 0}, {-1, 0, 1}, {0, 1, -1}}, i * s)) < kTight,
            "n=3 reference matrices");
  const auto q4 = quaternion_basis(4, 1);
  o.require(
      max_abs_diff(q4.q1, reference({{1, 0, -1, 0}, {0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}}, 0.5)) < kTight &&
          max_abs_diff(q4.q2, reference({{0, -1, 0, 1}, {-1, 0, 1, 0}, {0, 1, 0, -1}, {1, 0, -1, 0}}, i / 2.0)) < kTight &&
          max_abs_diff(q4.q3, reference({{0, 1, 0, -1}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 0, -1, 0}}, 0.5)) < kTight &&
          max_abs_diff(q4.q4, reference({{1, 0, -1, 0}, {0, -1, 0, 1}, {-1, 0, 1, 0}, {0, 1, 0, -1}}, i / 2.0)) < kTight,
      "n=4 reference matrices");
  return o;
}

double vec_diff(const std::vector<Complex>& a, const std::vector<Complex>& b, double sb = 1.0) {
  double m = 0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - sb * b[k]));
  return m;
}

Outcome eigenbases() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    const auto prc = complex_perm_matrix(mul(Element::rotation(n), Element::reflection(n)));
    for (int j = 1; j <= pi2_max_j(n); ++j) {
      const auto b = eigenbasis(n, j);
      const auto u = u_pi2(n, j);
      const std::string at = " at (" + std::to_string(n) + "," + std::to_string(j) + ")";
      double nu = 0, nv = 0;
      Complex uv = 0;
      for (int k = 0; k < n; ++k) {
        nu += std::norm(b.u[k]);
        nv += std::norm(b.v[k]);
        uv += std::conj(b.u[k]) * b.v[k];
      }
      o.require(std::abs(std::sqrt(nu) - 1) < kEps && std::abs(std::sqrt(nv) - 1) < kEps, "norms" + at);
      o.require(std::abs(uv) < kEps, "<u,v>" + at);
      o.require(vec_diff(prc * b.u, b.u) < kEps, "rho(RC) u" + at);
      o.require(vec_diff(prc * b.v, b.v, -1.0) < kEps, "rho(RC) v" + at);
      o.require(vec_diff(u * b.u, b.u) < kEps && vec_diff(u * b.v, b.v) < kEps, "U u, U v" + at);
    }
  }
  return o;
}

Outcome j_algebra() {
  Outcome o;
  for (int n : {4, 6, 8, 10}) {
    const long long m = n / 2;
    const auto J = big_j(n).entries(), A = j1(n).entries(), B = j2(n).entries();
    const auto pc = perm_matrix(Element::reflection(n)).entries();
    const std::string at = " at n=" + std::to_string(n);
    o.require(J * J == J * static_cast<long long>(n), "J^2" + at);
    o.require(A * A == A * m, "J1^2" + at);
    o.require(B * B == A * m, "J2^2" + at);
    o.require(A * B == B * m && B * A == B * m, "J1 J2" + at);
    o.require(pc * A == B, "P_C J1" + at);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Counting equivalence with brute-force oracles", counting_equivalence},
      {"Formula concordance", formula_concordance},
      {"h* vectors", hstar_vectors},
      {"Polynomial degree, reciprocity and zeros", ehrhart},
      {"Kernel and rank of the permutation map", kernel_rank},
      {"Character tables", character_tables},
      {"Idempotent suite", idempotent_suite},
      {"Quaternion relations and reference bases", quaternions},
      {"Eigenbasis", eigenbases},
      {"J-algebra identities", j_algebra},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("[%s] %zu. %s%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
