#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nslattice/blowup.hpp"
#include "nslattice/cli.hpp"
#include "nslattice/hirzebruch.hpp"
#include "nslattice/lattice.hpp"

#include <sstream>

namespace py = pybind11;

namespace nslattice {
namespace {

DivisorClass to_class(const std::vector<Int>& coeffs) { return DivisorClass(coeffs); }

std::vector<Int> from_class(const DivisorClass& d) {
  return {d.coeffs().begin(), d.coeffs().end()};
}

py::dict fixed_mobile_dict(const hirzebruch::FixedMobileDecomposition& d) {
  py::dict out;
  out["j"] = d.j;
  out["fixed"] = py::make_tuple(d.fixed.a, d.fixed.b);
  out["mobile"] = py::make_tuple(d.mobile.a, d.mobile.b);
  return out;
}

blowup::SurfaceModel to_model(const SurfaceLattice& lattice,
                              const std::vector<std::vector<Int>>& curves) {
  std::vector<blowup::CurveWitness> ws;
  for (const auto& c : curves) ws.push_back({DivisorClass(c), true});
  return {lattice, std::move(ws)};
}

py::object kind_to_py(const blowup::FixedComponentKind& kind) {
  py::dict out;
  out["kind"] = blowup::kind_name(kind);
  if (const auto* nr = std::get_if<blowup::NegativeRational>(&kind)) out["n"] = nr->n;
  if (const auto* g1 = std::get_if<blowup::GenusOne>(&kind)) out["self_int"] = g1->self_int;
  if (const auto* tv = std::get_if<blowup::TheoremViolation>(&kind)) out["reason"] = tv->reason;
  return std::move(out);
}

}  // namespace
}  // namespace nslattice

PYBIND11_MODULE(_core, m) {
  using namespace nslattice;
  m.doc() = "Exact divisor-class calculus on Neron-Severi lattices of rational surfaces.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<FamilyError>(m, "FamilyError", base.ptr());
  py::register_exception<InvalidParameterError>(m, "InvalidParameterError", base.ptr());
  py::register_exception<LatticeCorruptionError>(m, "LatticeCorruptionError", base.ptr());
  py::register_exception<NotEffectiveError>(m, "NotEffectiveError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  py::class_<SurfaceLattice>(m, "SurfaceLattice")
      .def_property_readonly("family",
                             [](const SurfaceLattice& l) { return family_name(l.family().kind); })
      .def_property_readonly("n", [](const SurfaceLattice& l) { return l.family().n; })
      .def_property_readonly("r", [](const SurfaceLattice& l) { return l.family().r; })
      .def_property_readonly("rank", &SurfaceLattice::rank)
      .def_property_readonly("basis_labels", &SurfaceLattice::basis_labels)
      .def_property_readonly("canonical",
                             [](const SurfaceLattice& l) { return from_class(l.canonical()); })
      .def_property_readonly("gram", [](const SurfaceLattice& l) {
        std::vector<std::vector<Int>> rows(l.rank(), std::vector<Int>(l.rank()));
        for (std::size_t i = 0; i < l.rank(); ++i)
          for (std::size_t j = 0; j < l.rank(); ++j) rows[i][j] = l.gram()(i, j);
        return rows;
      })
      .def("__repr__", [](const SurfaceLattice& l) {
        return "SurfaceLattice(" + family_name(l.family().kind) + ", rank=" +
               std::to_string(l.rank()) + ")";
      });

  m.def("hirzebruch", [](Int n) { return make_lattice(Family::hirzebruch(n)); }, py::arg("n"),
        "Lattice of F_n in the basis (C_n, F).");
  m.def("blowup_p2", [](Int r) { return make_lattice(Family::blowup_p2(r)); }, py::arg("r"),
        "Lattice of P^2 blown up at r points, basis (H, E_1..E_r).");
  m.def("blowup_hirzebruch",
        [](Int n, Int r) { return make_lattice(Family::blowup_hirzebruch(n, r)); }, py::arg("n"),
        py::arg("r"), "Lattice of F_n blown up at r points, basis (C_n, F, E_1..E_r).");

  m.def("intersect",
        [](const SurfaceLattice& l, const std::vector<Int>& d1, const std::vector<Int>& d2) {
          return intersect(l, to_class(d1), to_class(d2));
        },
        py::arg("lattice"), py::arg("d1"), py::arg("d2"));
  m.def("arithmetic_genus",
        [](const SurfaceLattice& l, const std::vector<Int>& d) {
          return arithmetic_genus(l, to_class(d));
        },
        py::arg("lattice"), py::arg("d"));
  m.def("euler_characteristic",
        [](const SurfaceLattice& l, const std::vector<Int>& d) {
          return euler_characteristic(l, to_class(d));
        },
        py::arg("lattice"), py::arg("d"));
  m.def("h0_lower_bound",
        [](const SurfaceLattice& l, const std::vector<Int>& d) {
          return h0_lower_bound(l, to_class(d));
        },
        py::arg("lattice"), py::arg("d"));
  m.def("basis_change_f1_to_p2",
        [](const SurfaceLattice& l, const std::vector<Int>& d) {
          return from_class(basis_change_f1_to_p2(l, to_class(d)));
        },
        py::arg("source"), py::arg("d"));
  m.def("basis_change_blf0_to_p2",
        [](const SurfaceLattice& l, const std::vector<Int>& d) {
          return from_class(basis_change_blf0_to_p2(l, to_class(d)));
        },
        py::arg("source"), py::arg("d"));
  m.def("enumerate_negative_rational_classes",
        [](const SurfaceLattice& l, Int self_int, Int degree_bound) {
          std::vector<std::vector<Int>> out;
          for (const auto& c : enumerate_negative_rational_classes(l, self_int, degree_bound))
            out.push_back(from_class(c));
          return out;
        },
        py::arg("lattice"), py::arg("self_int") = -1, py::arg("degree_bound") = 7);

  m.def("is_effective",
        [](Int n, Int a, Int b) { return hirzebruch::is_effective(n, a, b).has_value(); },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("nef_decompose",
        [](Int n, Int a, Int b) -> py::object {
          const auto v = hirzebruch::nef_decompose(n, a, b);
          if (const auto* d = std::get_if<hirzebruch::NefDecomposition>(&v))
            return py::make_tuple(d->s, d->t);
          return py::none();
        },
        py::arg("n"), py::arg("a"), py::arg("b"),
        "(s, t) with a C_n + b F = s (C_n + n F) + t F, or None when not nef.");
  m.def("fixed_mobile_decompose",
        [](Int n, Int a, Int b) {
          return fixed_mobile_dict(hirzebruch::fixed_mobile_decompose(n, a, b));
        },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("anticanonical_fixed_locus",
        [](Int n) { return fixed_mobile_dict(hirzebruch::anticanonical_fixed_locus(n)); },
        py::arg("n"));

  m.def("forced_fixed_components",
        [](const SurfaceLattice& l, const std::vector<std::vector<Int>>& curves) {
          std::vector<std::vector<Int>> out;
          for (const auto& w : blowup::forced_fixed_components(to_model(l, curves)))
            out.push_back(from_class(w.cls));
          return out;
        },
        py::arg("lattice"), py::arg("curves"));
  m.def("classify_fixed_component",
        [](const SurfaceLattice& l, const std::vector<Int>& g) {
          return kind_to_py(
              blowup::classify_fixed_component(to_model(l, {}), {DivisorClass(g), true}));
        },
        py::arg("lattice"), py::arg("g"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::istringstream in;
          std::ostringstream out;
          std::ostringstream err;
          const int code = cli::run(args, in, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process: (exit_code, stdout, stderr).");
}
