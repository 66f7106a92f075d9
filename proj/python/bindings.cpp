#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/iostream.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latdim/cli.hpp"
#include "latdim/decomposition.hpp"
#include "latdim/error.hpp"
#include "latdim/gabor.hpp"
#include "latdim/io.hpp"

namespace py = pybind11;
using namespace latdim;

namespace {

Subgroup lattice_from(const FiniteGroup& g, const std::string& spec) {
  auto hs = io::parse_lattices(g, spec);
  if (hs.size() != 1) throw Error(ErrorCode::InvalidInput, "expected a single lattice, got '" + spec + "'");
  return hs.front();
}

py::dict report_dict(const FrameReport& r) {
  py::dict d;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["is_frame"] = r.is_frame;
  d["riesz_lower"] = r.riesz_lower;
  d["riesz_upper"] = r.riesz_upper;
  d["is_riesz_sequence"] = r.is_riesz_sequence;
  d["is_riesz_basis"] = r.is_riesz_basis;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Center-valued von Neumann dimension and frame existence on finite groups";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "LatdimError", PyExc_ValueError);

  py::class_<FiniteGroup>(m, "Group")
      .def_static("named", &build_named, py::arg("name"))
      .def_static("cyclic", &build_cyclic, py::arg("n"))
      .def_static("from_table", &FiniteGroup::from_cayley_table, py::arg("table"), py::arg("label") = "custom")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("label", &FiniteGroup::label)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("cayley", &FiniteGroup::cayley)
      .def("subgroups", [](const FiniteGroup& g) {
        std::vector<std::vector<Element>> out;
        for (const auto& h : all_subgroups(g)) out.push_back(h.elements());
        return out;
      })
      .def("__repr__", [](const FiniteGroup& g) { return "<Group " + g.label() + " of order " + std::to_string(g.order()) + ">"; });

  py::class_<Cocycle>(m, "Cocycle")
      .def_static("trivial", &trivial_cocycle, py::arg("group"))
      .def_static("weyl_heisenberg", py::overload_cast<const FiniteGroup&>(&weyl_heisenberg), py::arg("base"))
      .def_property_readonly("group", &Cocycle::group)
      .def_property_readonly("label", &Cocycle::label)
      .def("__call__", &Cocycle::operator())
      .def("is_valid", [](const Cocycle& c) { return validate(c).valid; })
      .def("kleppner", [](const Cocycle& c) { return regularity(c).kleppner; })
      .def("center_dimension", &center_dimension);

  py::class_<ProjectiveRep>(m, "ProjectiveRep")
      .def_property_readonly("dim", &ProjectiveRep::dim)
      .def_property_readonly("label", &ProjectiveRep::label)
      .def_property_readonly("cocycle", &ProjectiveRep::cocycle)
      .def("matrix", [](const ProjectiveRep& r, Element x) { return Matrix(r(x)); })
      .def("is_irreducible", [](const ProjectiveRep& r) { return is_irreducible(r).irreducible; })
      .def("formal_dimension", [](const ProjectiveRep& r) { return formal_dimension(r); });

  m.def("irreducible_types", [](const Cocycle& c, std::uint64_t seed) { return irreducible_types(c, seed); },
        py::arg("cocycle"), py::arg("seed") = 0);

  py::class_<TimeFrequencyGroup>(m, "TimeFrequency")
      .def(py::init([](const FiniteGroup& a) { return build_tf(a); }), py::arg("base"))
      .def_readonly("base", &TimeFrequencyGroup::base)
      .def_readonly("group", &TimeFrequencyGroup::group)
      .def_readonly("cocycle", &TimeFrequencyGroup::cocycle)
      .def_readonly("rep", &TimeFrequencyGroup::rep);

  m.def(
      "center_valued_trace",
      [](const Cocycle& c, const Vector& coeffs) { return Vector(center_valued_trace(AlgebraElement(c, coeffs)).coeffs()); },
      py::arg("cocycle"), py::arg("coeffs"), "Fourier coefficients of Tr(a) for a = sum_g coeffs[g] lambda(g).");

  m.def(
      "phi",
      [](const ProjectiveRep& rep, const std::string& lattice, std::optional<Vector> window, bool oracle) {
        const auto h = lattice_from(rep.group(), lattice);
        const auto spec = window ? make_module_spec(rep, h, *window) : make_module_spec(rep, h);
        return Vector((oracle ? phi_oracle(spec) : phi(spec)).values);
      },
      py::arg("rep"), py::arg("lattice"), py::arg("window") = py::none(), py::arg("oracle") = false,
      "phi(gamma) over the lattice elements in ascending order.");

  m.def(
      "decide",
      [](const ProjectiveRep& rep, const std::string& lattice, std::size_t n, std::size_t d) {
        const auto dec = existence_decision(make_module_spec(rep, lattice_from(rep.group(), lattice)), n, d);
        py::dict out;
        out["frame"] = dec.frame;
        out["riesz"] = dec.riesz;
        out["basis"] = dec.basis;
        out["dpi_vol"] = dec.phi.dpi_vol;
        return out;
      },
      py::arg("rep"), py::arg("lattice"), py::arg("n") = 1, py::arg("d") = 1);

  m.def(
      "construct",
      [](const ProjectiveRep& rep, const std::string& lattice, std::size_t n, std::size_t d, const std::string& kind,
         std::uint64_t seed) {
        const auto spec = make_module_spec(rep, lattice_from(rep.group(), lattice));
        const auto sys = kind == "orthonormal" ? construct_orthonormal_generators(spec, n, d, seed)
                                               : construct_parseval_generators(spec, n, d, seed);
        return py::make_tuple(Matrix(sys.generators), report_dict(frame_report(sys)));
      },
      py::arg("rep"), py::arg("lattice"), py::arg("n") = 1, py::arg("d") = 1, py::arg("kind") = "parseval",
      py::arg("seed") = 0, "Returns (generators, frame report); generators has one column per window.");

  m.def(
      "gabor_scan",
      [](const FiniteGroup& base, std::size_t n_max, std::size_t d_max) {
        const auto r = gabor_scan(build_tf(base), n_max, d_max);
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["lattice"] = row.lattice;
          d["lattice_order"] = row.lattice_order;
          d["n"] = row.n;
          d["d"] = row.d;
          d["dpi_vol"] = row.dpi_vol;
          d["frame"] = row.frame;
          d["riesz"] = row.riesz;
          d["basis"] = row.basis;
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["violations"] = r.violations;
        out["construction_failures"] = r.construction_failures;
        out["constructions"] = r.constructions.size();
        return out;
      },
      py::arg("base"), py::arg("n_max") = 3, py::arg("d_max") = 3);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
}
