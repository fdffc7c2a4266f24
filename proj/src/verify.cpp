#include "dihedral/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dihedral/characters.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/group.hpp"
#include "dihedral/group_algebra.hpp"
#include "dihedral/magic.hpp"
#include "dihedral/permrep.hpp"
#include "dihedral/spectral.hpp"

namespace dihedral {

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.passed; }));
}

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& rep) : rep_(rep) {}

  void add(std::string name, bool passed, std::string detail = "") {
    rep_.checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void within(std::string name, double residual, double eps) {
    add(std::move(name), residual <= eps, "max residual " + fmt_double(residual));
  }

 private:
  VerifyReport& rep_;
};

void group_checks(int n, Recorder& rec) {
  const auto g = elements(n);
  bool assoc = true;
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& c : g) assoc = assoc && mul(mul(a, b), c) == mul(a, mul(b, c));
  rec.add("group.associativity", assoc);

  bool inverses = true, dihedral_relation = true;
  for (const auto& a : g) {
    inverses = inverses && mul(a, inv(a)).is_identity() && mul(inv(a), a).is_identity();
    if (!a.reflected()) continue;
    for (int k = 0; k < n; ++k) {
      const Element r = Element::rotation(n, k);
      dihedral_relation = dihedral_relation && mul(mul(a, r), a) == inv(r);
    }
  }
  rec.add("group.inverses", inverses);
  rec.add("group.reflection_inverts_rotations", dihedral_relation);
  rec.add("group.orders", element_order(Element::rotation(n)) == n &&
                              element_order(Element::reflection(n)) == 2);

  const auto data = class_data(n);
  std::set<Element> covered;
  bool disjoint = true, closed = true;
  for (const auto& cls : data.classes) {
    const std::set<Element> members(cls.begin(), cls.end());
    for (const auto& x : cls) {
      disjoint = disjoint && covered.insert(x).second;
      for (const auto& h : g) closed = closed && members.count(conjugate(h, x)) == 1;
    }
  }
  const std::size_t expected_classes = n % 2 == 1 ? (n + 3) / 2 : n / 2 + 3;
  rec.add("group.classes_partition", disjoint && covered.size() == g.size() && closed);
  rec.add("group.class_count", data.classes.size() == expected_classes,
          std::to_string(data.classes.size()) + " classes");

  std::set<Element> commutators;
  for (const auto& x : g)
    for (const auto& y : g) commutators.insert(commutator(x, y));
  std::set<Element> generated{Element::identity(n)};
  for (int t = 0; t < n; ++t)
    generated.insert(power(Element::rotation(n, data.commutator_generator_power), t));
  // The commutator set of D_{2n} is already a subgroup, so no closure is needed.
  rec.add("group.commutator_subgroup", commutators == generated,
          "[G,G] = <R^" + std::to_string(data.commutator_generator_power) + ">");

  bool multiplicative = true;
  for (const auto& chi : data.linear_characters)
    for (const auto& a : g)
      for (const auto& b : g) multiplicative = multiplicative && chi.value(mul(a, b)) == chi.value(a) * chi.value(b);
  rec.add("group.linear_characters_multiplicative", multiplicative);

  bool sgn_is_det = true;
  for (const auto& a : g)
    sgn_is_det = sgn_is_det && linear_character_value(LinearKind::Sgn, a) == to_permutation(a).sign();
  rec.add("group.sgn_equals_permutation_sign", sgn_is_det);
}

void permrep_checks(int n, Recorder& rec) {
  const auto g = elements(n);
  bool hom = true, shapes = true, traces = true;
  for (const auto& a : g) {
    const IntMatrix pa = perm_matrix(a).entries();
    for (const auto& b : g) hom = hom && pa * perm_matrix(b).entries() == perm_matrix(mul(a, b)).entries();
    shapes = shapes && (a.reflected() ? is_anticirculant(pa) : is_circulant(pa));
    traces = traces && pa.trace() == rho_character(a) && to_permutation(a).fixed_points() == rho_character(a);
  }
  rec.add("permrep.homomorphism", hom);
  rec.add("permrep.circulant_structure", shapes);
  rec.add("permrep.trace_is_fixed_points", traces);
}

void character_checks(int n, double eps, Recorder& rec) {
  const CharacterTable t = character_table(n);
  double worst = 0.0;
  int dim_sq = 0;
  for (const auto& a : irreducibles(n)) {
    dim_sq += a.dimension() * a.dimension();
    for (const auto& b : irreducibles(n)) {
      const Complex ip = inner_product(t, a.str(), b.str());
      worst = std::max(worst, std::abs(ip - Complex(a == b ? 1.0 : 0.0, 0.0)));
    }
  }
  rec.within("characters.orthonormality", worst, eps);
  rec.add("characters.dimension_count", dim_sq == 2 * n, "sum d^2 = " + std::to_string(dim_sq));

  const auto mult = decompose_rho(n);
  bool matches = true;
  int total = 0;
  for (const auto& [label, k] : mult) {
    int expected = 0;
    if (label.kind == IrreducibleLabel::Kind::Triv || label.kind == IrreducibleLabel::Kind::Pi2) expected = 1;
    if (n % 2 == 0 && label == chi_prime(n)) expected = 1;
    matches = matches && k == expected;
    total += k * label.dimension();
  }
  rec.add("characters.rho_decomposition", matches && total == n);

  if (n % 2 == 0) {
    double diff = 0.0;
    for (const auto& a : elements(n))
      diff = std::max(diff, std::abs(pi2_character(n / 2, a) -
                                     linear_character_value(LinearKind::Sgn, a) -
                                     linear_character_value(LinearKind::DetSgn, a)));
    rec.within("characters.pi2_m_splits", diff, eps);
  }
}

void algebra_checks(int n, Recorder& rec) {
  const auto g = elements(n);
  bool hom = true;
  for (const auto& a : g)
    for (const auto& b : g) {
      const auto ea = GroupAlgebraElement::basis(a);
      const auto eb = GroupAlgebraElement::basis(b);
      hom = hom && phi_rho(convolve(ea, eb)).entries() == phi_rho(ea).entries() * phi_rho(eb).entries();
    }
  rec.add("algebra.phi_homomorphism", hom);

  const KernelBasis kb = kernel_basis(n);
  bool zero = true;
  for (const auto& v : kb.vectors) zero = zero && phi_rho(v).entries() == RationalMatrix(n, n);
  rec.add("algebra.kernel_maps_to_zero", zero && static_cast<int>(kb.vectors.size()) == kb.expected_dim);

  const int rank = phi_rank(n);
  rec.add("algebra.rank", rank == mm_dimension(n) && rank + kb.expected_dim == 2 * n,
          "rank " + std::to_string(rank));

  const auto chars = class_data(n).linear_characters;
  bool orthogonal = true;
  for (const auto& a : chars)
    for (const auto& b : chars) {
      const auto prod = convolve(character_idempotent(n, a.kind), character_idempotent(n, b.kind));
      orthogonal = orthogonal && (a.kind == b.kind ? prod == character_idempotent(n, a.kind) : prod.is_zero());
    }
  rec.add("algebra.character_idempotents_orthogonal", orthogonal);
}

void j_checks(int n, Recorder& rec) {
  const auto j = big_j(n).entries();
  rec.add("magic.J_squared", j * j == j * static_cast<long long>(n));
  if (n % 2 == 1) return;
  const long long m = n / 2;
  const auto a = j1(n).entries();
  const auto b = j2(n).entries();
  IntMatrix even_rot(n, n), odd_rot(n, n), even_ref(n, n), odd_ref(n, n);
  for (const auto& g : elements(n)) {
    const auto p = perm_matrix(g).entries();
    if (g.reflected())
      (g.rot() % 2 == 0 ? even_ref : odd_ref) += p;
    else
      (g.rot() % 2 == 0 ? even_rot : odd_rot) += p;
  }
  rec.add("magic.J1_J2_relations",
          even_rot == odd_ref && even_rot == a && odd_rot == even_ref && odd_rot == b && a + b == j);
  const auto pc = perm_matrix(Element::reflection(n, 0)).entries();
  rec.add("magic.J_algebra",
          a * a == a * m && b * b == a * m && a * b == b * m && b * a == b * m && pc * a == b && pc * b == a);
}

void counting_checks(int n, const VerifyOptions& opts, Recorder& rec) {
  bool formulas = true;
  const CountSeries s = series(n, 20);
  for (long long r = 0; r <= 20; ++r) {
    const BigInt h = count_closed(n, r);
    formulas = formulas && s.values[r] == h;
    if (n % 2 == 1)
      formulas = formulas && count_sum_formula(n, r) == h && count_pie(n, r) == h;
    else
      formulas = formulas && count_convolution(n, r) == h;
  }
  rec.add("counting.formula_concordance", formulas, "r = 0..20");

  const std::uint64_t cap = std::min<std::uint64_t>(opts.max_tuples, 2'000'000);
  bool oracle = true;
  long long last_r = -1;
  for (long long r = 0; r <= opts.oracle_r_max; ++r) {
    if (tuple_count(n, r) > cap) break;
    const BigInt h = count_closed(n, r);
    oracle = oracle && oracle_count(n, r, cap) == h && oracle_canonical(n, r, cap) == h;
    last_r = r;
  }
  rec.add("counting.oracle_agreement", oracle && last_r >= 0,
          "r = 0.." + std::to_string(last_r));

  const EhrhartReport e = check_ehrhart_properties(n);
  rec.add("counting.ehrhart_properties", e.ok(),
          "degree " + std::to_string(e.degree) + ", h* length " + std::to_string(s.hstar.size()));
}

void idempotent_checks(int n, double eps, Recorder& rec) {
  const IdempotentSet set = idempotent_set(n, eps);
  const std::size_t expected = n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;
  rec.add("spectral.member_count", set.members.size() == expected,
          std::to_string(set.members.size()) + " idempotents");

  double idem = 0.0, ortho = 0.0, agree = 0.0, center = 0.0, line = 0.0;
  bool shape = true, ranks = true;
  ComplexMatrix sum(n, n);
  for (std::size_t a = 0; a < set.members.size(); ++a) {
    const auto& [label, u] = set.members[a];
    const ComplexMatrix& m = u.entries();
    sum += m;
    idem = std::max(idem, max_abs_diff(m * m, m));
    for (std::size_t b = 0; b < set.members.size(); ++b)
      if (a != b) ortho = std::max(ortho, max_abs(m * set.members[b].second.entries()));
    agree = std::max(agree, max_abs_diff(m, project_isotypic(n, label)));
    for (const auto& g : elements(n)) {
      const ComplexMatrix p = complex_perm_matrix(g);
      center = std::max(center, max_abs_diff(p * m, m * p));
    }
    shape = shape && is_circulant(m, 1e-12) && max_abs_diff(m, m.transpose()) <= 1e-12;
    const double target = label.kind == IrreducibleLabel::Kind::Triv ? 1.0 : 0.0;
    line = std::max(line, std::abs(u.line_sum() - Complex(target, 0.0)));
    ranks = ranks && projector_rank(m) == label.dimension();
  }
  rec.within("spectral.idempotency", idem, eps);
  rec.within("spectral.orthogonality", ortho, eps);
  rec.within("spectral.completeness", max_abs_diff(sum, ComplexMatrix::identity(n)), eps);
  rec.within("spectral.matches_isotypic_projection", agree, eps);
  rec.within("spectral.central", center, eps);
  rec.add("spectral.symmetric_circulant", shape);
  rec.within("spectral.line_sums", line, 1e-12);
  rec.add("spectral.projector_ranks", ranks);

  int total = 0;
  for (const auto& [label, d] : ideal_dimensions(n)) total += d;
  rec.add("spectral.ideal_dimensions", total == mm_dimension(n), "total " + std::to_string(total));
}

void pi2_checks(int n, double eps, Recorder& rec) {
  const ComplexMatrix rc = complex_perm_matrix(mul(Element::rotation(n), Element::reflection(n)));
  const ComplexMatrix pc = complex_perm_matrix(Element::reflection(n));
  double eig = 0.0, quat = 0.0, conj = 0.0;
  for (int j = 1; j <= pi2_max_j(n); ++j) {
    const Eigenbasis b = eigenbasis(n, j);
    const ComplexMatrix u = u_pi2(n, j);
    double nu = 0.0, nv = 0.0;
    Complex uv{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      nu += std::norm(b.u[k]);
      nv += std::norm(b.v[k]);
      uv += std::conj(b.u[k]) * b.v[k];
    }
    eig = std::max({eig, std::abs(nu - 1.0), std::abs(nv - 1.0), std::abs(uv)});
    const auto ru = rc * b.u, rv = rc * b.v, uu = u * b.u, uvv = u * b.v;
    for (int k = 0; k < n; ++k)
      eig = std::max({eig, std::abs(ru[k] - b.u[k]), std::abs(rv[k] + b.v[k]),
                      std::abs(uu[k] - b.u[k]), std::abs(uvv[k] - b.v[k])});
    quat = std::max(quat, quaternion_residual(quaternion_basis(n, j)).worst());
    const ComplexMatrix up = u_prime(n, j);
    conj = std::max({conj, max_abs_diff(pc * u * pc, u), max_abs(pc * up * pc + up),
                     max_abs(up * up + u), max_abs_diff(u * up, up)});
  }
  rec.within("spectral.eigenbasis", eig, eps);
  rec.within("spectral.quaternion_relations", quat, eps);
  rec.within("spectral.u_prime_relations", conj, eps);
}

}  // namespace

VerifyReport verify_all(int n, const VerifyOptions& opts) {
  require_group_order(n);
  VerifyReport rep{n, {}};
  Recorder rec(rep);
  group_checks(n, rec);
  permrep_checks(n, rec);
  character_checks(n, opts.eps, rec);
  algebra_checks(n, rec);
  j_checks(n, rec);
  counting_checks(n, opts, rec);
  idempotent_checks(n, opts.eps, rec);
  pi2_checks(n, opts.eps, rec);
  return rep;
}

}  // namespace dihedral
