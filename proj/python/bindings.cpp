#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eigenbound/cli.hpp"
#include "eigenbound/geometry.hpp"
#include "eigenbound/operator_bounds.hpp"
#include "eigenbound/shape_io.hpp"
#include "eigenbound/verification.hpp"

namespace py = pybind11;
using namespace eigenbound;

namespace {

MinimizationInput input(int n, double M, double L, double m) { return {n, M, L, m}; }

py::dict report_dict(const BoundReport& r)
{
  py::dict d;
  d["operator"] = std::string(to_string(r.op));
  d["n"] = r.n;
  d["m"] = r.m;
  d["m_star"] = r.m_star;
  d["liyau"] = r.liyau;
  d["melas"] = r.melas;
  d["exact"] = r.exact;
  d["asymptotic"] = r.asymptotic;
  d["theorem"] = r.theorem_form;
  d["epsilon"] = r.epsilon;
  d["degenerate"] = r.degenerate;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Lower bounds for eigenvalue sums of the Dirichlet Laplacian, Stokes operator and bi-Laplacian";

  py::register_exception<ShapeParseError>(m, "ShapeParseError", PyExc_ValueError);

  py::enum_<OperatorKind>(m, "Operator")
      .value("laplace", OperatorKind::dirichlet_laplacian)
      .value("stokes", OperatorKind::stokes)
      .value("bilaplace", OperatorKind::dirichlet_bilaplacian);

  py::class_<GeometrySummary>(m, "Geometry")
      .def(py::init([](int n, double volume, double inertia) {
             GeometrySummary g{n, volume, inertia};
             validate(g);
             return g;
           }),
           py::arg("n"), py::arg("volume"), py::arg("inertia"))
      .def_readonly("n", &GeometrySummary::n)
      .def_readonly("volume", &GeometrySummary::volume)
      .def_readonly("inertia", &GeometrySummary::inertia)
      .def("__repr__", [](const GeometrySummary& g) {
        std::ostringstream s;
        s << "Geometry(n=" << g.n << ", volume=" << g.volume << ", inertia=" << g.inertia << ")";
        return s.str();
      });

  m.def("parse_operator", [](const std::string& s) { return parse_operator(s); });
  m.def("geometry_from_json", [](const std::string& text) { return summarize(parse_shape(text)); },
        py::arg("document"), "Volume and minimal second moment of a shape document");

  // minimization problem
  m.def("scaled_mass", [](int n, double M, double L, double mass) { return scaled_mass(input(n, M, L, mass)); },
        py::arg("n"), py::arg("M"), py::arg("L"), py::arg("m"));
  m.def("solve_t", [](int n, double m_star) { return solve_t(n, m_star); }, py::arg("n"), py::arg("m_star"));
  m.def("sigma_exact", [](int n, double M, double L, double mass) { return sigma_exact(input(n, M, L, mass)); },
        py::arg("n"), py::arg("M"), py::arg("L"), py::arg("m"));
  m.def("sigma4_exact", [](int n, double M, double L, double mass) { return sigma4_exact(input(n, M, L, mass)); },
        py::arg("n"), py::arg("M"), py::arg("L"), py::arg("m"));
  m.def("sigma_liyau", [](int n, double M, double mass) { return sigma_liyau(input(n, M, 1, mass)); },
        py::arg("n"), py::arg("M"), py::arg("m"));
  m.def("sigma_asymptotic",
        [](int n, double M, double L, double mass) { return sigma_asymptotic(input(n, M, L, mass)); },
        py::arg("n"), py::arg("M"), py::arg("L"), py::arg("m"));
  m.def("sigma_excess", [](int n, double M, double L, double mass) { return sigma_excess(input(n, M, L, mass)); },
        py::arg("n"), py::arg("M"), py::arg("L"), py::arg("m"));

  // operator bounds
  m.def("bound_liyau", &bound_liyau, py::arg("op"), py::arg("geometry"), py::arg("m"));
  m.def("bound_exact", [](OperatorKind k, const GeometrySummary& g, double mass) {
          return report_dict(bound_exact(k, g, mass));
        },
        py::arg("op"), py::arg("geometry"), py::arg("m"));
  m.def("bound_theorem", &bound_theorem_234, py::arg("op"), py::arg("geometry"), py::arg("m"),
        py::arg("lemma_constants") = false);
  m.def("m_star_floor", &m_star_floor, py::arg("op"), py::arg("n"));
  m.def("beta", &beta_theorem, py::arg("op"), py::arg("n"));

  // oracles
  m.def("box_spectrum",
        [](const std::vector<double>& sides, std::size_t count, unsigned workers) {
          BoxSpectrumOptions o;
          o.workers = workers;
          py::gil_scoped_release release;
          return box_spectrum(sides, count, o).eigenvalues;
        },
        py::arg("sides"), py::arg("m"), py::arg("workers") = 1);
  m.def("lp_minimize",
        [](int n, double M, double L, double mass, int grid, double r_max) {
          if (r_max <= 0) r_max = default_lp_radius(input(n, M, L, mass));
          return lp_minimize(n, M, L, mass, grid, r_max).objective;
        },
        py::arg("n"), py::arg("M"), py::arg("L"), py::arg("m"), py::arg("grid") = 400, py::arg("r_max") = 0.0);

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "eigenbound");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr)");
}
