#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dihedral/characters.hpp"
#include "dihedral/counting.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/group.hpp"
#include "dihedral/group_algebra.hpp"
#include "dihedral/magic.hpp"
#include "dihedral/permrep.hpp"
#include "dihedral/spectral.hpp"
#include "dihedral/verify.hpp"

namespace py = pybind11;
using namespace dihedral;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

template <class T>
py::array_t<T> to_numpy(const Matrix<T>& m) {
  py::array_t<T> arr({m.rows(), m.cols()});
  auto view = arr.template mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  return arr;
}

py::array_t<Complex> to_numpy(const std::vector<Complex>& v) {
  py::array_t<Complex> arr(static_cast<py::ssize_t>(v.size()));
  auto view = arr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) view(i) = v[i];
  return arr;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dihedral permutation algebras: counting, characters, idempotents";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Element>(m, "Element")
      .def(py::init<int, bool, long long>(), py::arg("n"), py::arg("reflected"), py::arg("rot"))
      .def_static("parse", &Element::parse, py::arg("n"), py::arg("word"))
      .def_property_readonly("n", &Element::n)
      .def_property_readonly("reflected", &Element::reflected)
      .def_property_readonly("rot", &Element::rot)
      .def_property_readonly("index", &Element::index)
      .def("word", &Element::word)
      .def("inverse", [](const Element& a) { return inv(a); })
      .def("order", [](const Element& a) { return element_order(a); })
      .def("__mul__", [](const Element& a, const Element& b) { return mul(a, b); })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& a) { return a.n() * 100003 + a.index(); })
      .def("__repr__", [](const Element& a) { return "Element(n=" + std::to_string(a.n()) + ", " + a.word() + ")"; });

  m.def("elements", &elements, py::arg("n"));

  m.def("class_data", [](int n) {
    const auto d = class_data(n);
    py::list classes;
    for (const auto& cls : d.classes) {
      py::list words;
      for (const auto& g : cls) words.append(g.word());
      classes.append(words);
    }
    py::list chars;
    for (const auto& c : d.linear_characters) chars.append(c.name());
    py::dict out;
    out["classes"] = classes;
    out["class_sizes"] = d.class_sizes;
    out["commutator_generator_power"] = d.commutator_generator_power;
    out["linear_characters"] = chars;
    return out;
  }, py::arg("n"));

  m.def("perm_matrix", [](int n, const std::string& word) {
    return to_numpy(perm_matrix(Element::parse(n, word)).entries());
  }, py::arg("n"), py::arg("word"));

  m.def("character_table", [](int n) {
    const auto t = character_table(n);
    py::list reps, rows;
    for (const auto& g : t.class_reps) reps.append(g.word());
    for (const auto& r : t.rows) {
      py::list vals;
      for (const auto& v : r.values) vals.append(v.real());
      rows.append(py::make_tuple(r.label, vals));
    }
    py::dict out;
    out["n"] = t.n;
    out["class_names"] = t.class_names;
    out["class_reps"] = reps;
    out["class_sizes"] = t.class_sizes;
    out["rows"] = rows;
    return out;
  }, py::arg("n"));

  m.def("decompose_rho", [](int n) {
    py::dict out;
    for (const auto& [label, k] : decompose_rho(n)) out[py::str(label.str())] = k;
    return out;
  }, py::arg("n"));

  m.def("root_of_unity_sum", &root_of_unity_sum, py::arg("n"), py::arg("j"));

  m.def("phi_rank", &phi_rank, py::arg("n"));
  m.def("mm_dimension", &mm_dimension, py::arg("n"));
  m.def("kernel_basis_strings", [](int n) {
    std::vector<std::vector<std::string>> out;
    for (const auto& v : kernel_basis(n).vectors) {
      out.emplace_back();
      for (const auto& c : v.coeffs()) out.back().push_back(rational_to_string(c));
    }
    return out;
  }, py::arg("n"), "Kernel basis of the permutation map as 'p/q' strings in basis order.");

  m.def("count_closed", [](int n, long long r) { return to_py(count_closed(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("count_sum_formula", [](int n, long long r) { return to_py(count_sum_formula(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("count_pie", [](int n, long long r) { return to_py(count_pie(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("count_convolution", [](int n, long long r) { return to_py(count_convolution(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("oracle_count", [](int n, long long r, std::uint64_t max_tuples) {
    return to_py(oracle_count(n, r, max_tuples));
  }, py::arg("n"), py::arg("r"), py::arg("max_tuples") = kDefaultMaxTuples);
  m.def("oracle_canonical", [](int n, long long r, std::uint64_t max_tuples) {
    return to_py(oracle_canonical(n, r, max_tuples));
  }, py::arg("n"), py::arg("r"), py::arg("max_tuples") = kDefaultMaxTuples);

  m.def("series", [](int n, int r_max) {
    const auto s = series(n, r_max);
    py::dict out;
    out["n"] = s.n;
    out["r_max"] = s.r_max;
    out["values"] = to_py(s.values);
    out["hstar"] = to_py(s.hstar);
    return out;
  }, py::arg("n"), py::arg("r_max"));

  m.def("check_ehrhart_properties", [](int n) {
    const auto e = check_ehrhart_properties(n);
    py::dict out;
    out["degree"] = e.degree;
    out["expected_degree"] = e.expected_degree;
    out["reciprocity"] = e.reciprocity;
    out["vanishing"] = e.vanishing;
    out["hstar_positive"] = e.hstar_positive;
    out["hstar_symmetric"] = e.hstar_symmetric;
    out["hstar_unimodal"] = e.hstar_unimodal;
    out["ok"] = e.ok();
    return out;
  }, py::arg("n"));

  m.def("circulant_idempotent", [](int n, int j) { return to_numpy(circulant_idempotent(n, j)); }, py::arg("n"), py::arg("j"));
  m.def("project_isotypic", [](int n, const std::string& label) {
    return to_numpy(project_isotypic(n, IrreducibleLabel::parse(label)));
  }, py::arg("n"), py::arg("label"));
  m.def("idempotent_set", [](int n, double eps) {
    py::list out;
    for (const auto& [label, u] : idempotent_set(n, eps).members)
      out.append(py::make_tuple(label.str(), to_numpy(u.entries())));
    return out;
  }, py::arg("n"), py::arg("eps") = kDefaultTolerance);
  m.def("u_prime", [](int n, int j) { return to_numpy(u_prime(n, j)); }, py::arg("n"), py::arg("j"));
  m.def("eigenbasis", [](int n, int j) {
    const auto b = eigenbasis(n, j);
    py::dict out;
    out["u"] = to_numpy(b.u);
    out["v"] = to_numpy(b.v);
    out["w_pos"] = to_numpy(b.w_pos);
    out["w_neg"] = to_numpy(b.w_neg);
    return out;
  }, py::arg("n"), py::arg("j"));
  m.def("quaternion_basis", [](int n, int j) {
    const auto q = quaternion_basis(n, j);
    return py::make_tuple(to_numpy(q.q1), to_numpy(q.q2), to_numpy(q.q3), to_numpy(q.q4));
  }, py::arg("n"), py::arg("j"));
  m.def("ideal_dimensions", &ideal_dimensions, py::arg("n"));

  m.def("verify", [](int n, double eps, std::uint64_t max_tuples) {
    VerifyOptions opts;
    opts.eps = eps;
    opts.max_tuples = max_tuples;
    const auto rep = verify_all(n, opts);
    py::list checks;
    for (const auto& c : rep.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
    py::dict out;
    out["n"] = rep.n;
    out["checks"] = checks;
    out["ok"] = rep.ok();
    return out;
  }, py::arg("n"), py::arg("eps") = kDefaultTolerance, py::arg("max_tuples") = kDefaultMaxTuples);
}
