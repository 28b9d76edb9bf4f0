#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "htype/export.hpp"
#include "htype/induction.hpp"
#include "htype/lattice.hpp"
#include "htype/lie.hpp"
#include "htype/suite.hpp"
#include "htype/ungraded.hpp"

namespace py = pybind11;
using namespace htype;

namespace {

// Dyadic <-> fractions.Fraction. Inputs may be int, Fraction, str or float,
// anything whose str() Dyadic::parse accepts.
py::object to_fraction(const Dyadic& d) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(d.numerator(), py::int_(1) << py::int_(d.exponent()));
}

Dyadic from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h))
    return Dyadic(h.cast<std::int64_t>());
  return Dyadic::parse(py::str(h).cast<std::string>());
}

std::vector<Dyadic> vec_from_py(const py::iterable& xs) {
  std::vector<Dyadic> out;
  for (auto h : xs)
    out.push_back(from_py(h));
  return out;
}

py::list vec_to_py(const std::vector<Dyadic>& xs) {
  py::list out;
  for (const auto& d : xs)
    out.append(to_fraction(d));
  return out;
}

py::tuple group_to_py(const GroupElement& x) { return py::make_tuple(vec_to_py(x.u), vec_to_py(x.v)); }

GroupElement group_from_py(const py::iterable& u, const py::iterable& v) {
  return {vec_from_py(u), vec_from_py(v)};
}

void raise_if_failed(const CheckReport& r) {
  if (!r)
    throw py::value_error(r.to_string());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integral Clifford modules, H-type structure constants and lattice growth.";

  py::register_exception<std::length_error>(m, "CapExceeded", PyExc_OverflowError);

  py::class_<SignedPerm>(m, "SignedPerm")
      .def(py::init([](std::vector<std::uint32_t> t, std::vector<int> s) {
             return SignedPerm(std::move(t), std::vector<std::int8_t>(s.begin(), s.end()));
           }),
           py::arg("targets"), py::arg("signs"))
      .def_static("identity", &SignedPerm::identity)
      .def("__len__", &SignedPerm::size)
      .def_property_readonly("targets",
                             [](const SignedPerm& g) {
                               return std::vector<std::uint32_t>(g.targets().begin(), g.targets().end());
                             })
      .def_property_readonly(
          "signs", [](const SignedPerm& g) { return std::vector<int>(g.signs().begin(), g.signs().end()); })
      .def("matrix",
           [](const SignedPerm& g) {
             std::vector<std::vector<int>> M(g.size(), std::vector<int>(g.size(), 0));
             for (std::size_t p = 0; p < g.size(); ++p)
               M[g.target(p)][p] = g.sign(p);
             return M;
           },
           "Dense matrix with M[q][p] = sign when v_p maps to sign * v_q.")
      .def("__matmul__", &sp_compose)
      .def("__neg__", [](const SignedPerm& g) { return -g; })
      .def("transpose", &sp_transpose)
      .def(py::self == py::self)
      .def("__repr__", [](const SignedPerm& g) { return "<SignedPerm n=" + std::to_string(g.size()) + ">"; });

  py::class_<GradedRep>(m, "GradedRep")
      .def_readonly("k", &GradedRep::k)
      .def_readonly("parity", &GradedRep::parity)
      .def_readonly("gens", &GradedRep::gens)
      .def_readonly("provenance", &GradedRep::provenance)
      .def_property_readonly("dim", &GradedRep::dim);

  py::class_<UngradedRep>(m, "UngradedRep")
      .def_readonly("k", &UngradedRep::k)
      .def_property_readonly("variant", [](const UngradedRep& r) { return std::string(to_string(r.variant)); })
      .def_readonly("gens", &UngradedRep::gens)
      .def_readonly("provenance", &UngradedRep::provenance)
      .def_property_readonly("dim", &UngradedRep::dim);

  py::class_<StructTensor>(m, "StructTensor")
      .def_property_readonly("m", &StructTensor::m)
      .def_property_readonly("n", &StructTensor::n)
      .def("entry", &StructTensor::entry, py::arg("a"), py::arg("p"), py::arg("q"))
      .def("triples",
           [](const StructTensor& A) {
             std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, int>> out;
             for (const auto& t : A.triples())
               out.emplace_back(t.a, t.p, t.q, t.sign);
             return out;
           },
           "Nonzero (a, p, q, sign), 0-based.")
      .def("bracket",
           [](const StructTensor& A, const py::iterable& v, const py::iterable& w) {
             const auto x = vec_from_py(v), y = vec_from_py(w);
             return vec_to_py(bracket<Dyadic>(x, y, A));
           },
           py::arg("v"), py::arg("w"));

  m.def("build_graded", &build_graded, py::arg("k"), py::arg("cap") = kDefaultCap);
  m.def("extract_irreducible",
        [](int k, const std::string& variant, int cap) { return extract_irreducible(k, parse_variant(variant), cap); },
        py::arg("k"), py::arg("variant") = "default", py::arg("cap") = kDefaultCap);
  m.def("admissible_variants", [](int k) {
    std::vector<std::string> out;
    for (auto v : admissible_variants(k))
      out.emplace_back(to_string(v));
    return out;
  });
  m.def("structure_constants", &structure_constants, py::arg("rep"));
  m.def("omega", [](const UngradedRep& r) { return omega_action(r); }, py::arg("rep"));
  m.def("omega_graded", [](const GradedRep& w) { return omega_action(w); }, py::arg("rep"));
  m.def("plus_minus_iso", &check_plus_minus_iso, py::arg("k"), py::arg("cap") = kDefaultCap);

  m.def("verify_clifford",
        [](const std::vector<SignedPerm>& gens, int k) { raise_if_failed(verify_clifford(gens, k)); },
        py::arg("gens"), py::arg("k"), "Raises ValueError naming the first violated identity.");
  m.def("verify_htype", [](const StructTensor& A) { raise_if_failed(verify_htype(A)); }, py::arg("tensor"));
  m.def(
      "verify",
      [](int k, int samples, int cap) {
        SuiteOptions opts;
        opts.cap = cap;
        opts.lattice_samples = samples;
        opts.reduce_samples = samples;
        py::list out;
        for (const auto& c : run_suite(k, opts)) {
          py::dict d;
          d["k"] = c.k;
          d["variant"] = std::string(to_string(c.variant));
          d["module"] = c.module;
          d["check"] = c.check;
          d["ok"] = c.ok;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("k"), py::arg("samples") = 200, py::arg("cap") = kDefaultCap);

  m.def(
      "dims",
      [](int max_k, int cap) {
        std::vector<std::tuple<int, std::size_t, std::size_t, std::string>> out;
        for (const auto& r : dimension_table(max_k, cap))
          out.emplace_back(r.k, r.ungraded, r.graded, r.note);
        return out;
      },
      py::arg("max_k"), py::arg("cap") = kDefaultCap, "Rows (k, a_k, b_k, note).");

  m.def("to_json", [](const UngradedRep& r, int indent) { return to_json(make_record(r), indent); },
        py::arg("rep"), py::arg("indent") = 1);
  m.def(
      "verify_json", [](const std::string& text) { raise_if_failed(verify_record(record_from_json(text))); },
      py::arg("text"));

  m.def("group_mul",
        [](const StructTensor& A, const py::iterable& xu, const py::iterable& xv, const py::iterable& yu,
           const py::iterable& yv) { return group_to_py(group_mul(group_from_py(xu, xv), group_from_py(yu, yv), A)); },
        py::arg("tensor"), py::arg("xu"), py::arg("xv"), py::arg("yu"), py::arg("yv"));
  m.def("group_inverse",
        [](const py::iterable& u, const py::iterable& v) { return group_to_py(group_inverse(group_from_py(u, v))); },
        py::arg("u"), py::arg("v"));
  m.def("group_commutator",
        [](const StructTensor& A, const py::iterable& xu, const py::iterable& xv, const py::iterable& yu,
           const py::iterable& yv) {
          return group_to_py(group_commutator(group_from_py(xu, xv), group_from_py(yu, yv), A));
        },
        py::arg("tensor"), py::arg("xu"), py::arg("xv"), py::arg("yu"), py::arg("yv"));
  m.def(
      "reduce",
      [](const StructTensor& A, const py::iterable& u, const py::iterable& v) {
        const auto r = reduce_to_fundamental(group_from_py(u, v), A);
        return py::make_tuple(group_to_py(r.lattice.to_group()), group_to_py(r.reduced));
      },
      py::arg("tensor"), py::arg("u"), py::arg("v"),
      "Returns ((u, v) of the lattice element l, (u, v) of x * l in the fundamental domain).");

  m.def("growth_degree", &growth_degree, py::arg("m"), py::arg("n"));
  m.def(
      "ball_count",
      [](const StructTensor& A, int radius, const std::string& gen_set, std::uint64_t element_cap) {
        GeneratingSet mode;
        if (gen_set == "exact")
          mode = GeneratingSet::Exact;
        else if (gen_set == "integer")
          mode = GeneratingSet::Integer;
        else
          throw py::value_error("gen_set must be 'exact' or 'integer'");
        const auto gens = generating_set(A, mode);
        py::gil_scoped_release release;
        const auto res = ball_count(A, gens, radius, element_cap);
        return std::make_pair(res.g, res.truncated);
      },
      py::arg("tensor"), py::arg("radius"), py::arg("gen_set") = "exact",
      py::arg("element_cap") = kDefaultElementCap, "Returns (g, truncated) with g[R] for R = 0..radius.");
  m.def(
      "subgroup_index",
      [](const StructTensor& A, const std::string& gen_set) {
        return subgroup_index(A, generating_set(A, gen_set == "integer" ? GeneratingSet::Integer : GeneratingSet::Exact));
      },
      py::arg("tensor"), py::arg("gen_set") = "exact");
  m.def("loglog_slope",
        [](const std::vector<std::uint64_t>& g, int r_min, int r_max) { return loglog_slope(g, r_min, r_max); },
        py::arg("g"), py::arg("r_min"), py::arg("r_max"));
}
