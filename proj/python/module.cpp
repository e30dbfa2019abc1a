// SPDX-License-Identifier: Apache-2.0
// Python bindings for the main operations: exact period counts, tangent loci,
// bubble/point detection, continuation, and orbit diagrams.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbitkit/continuation.hpp"
#include "orbitkit/diagram.hpp"
#include "orbitkit/scan_detect.hpp"
#include "orbitkit/version.hpp"

namespace py = pybind11;
using namespace orbitkit;

namespace {

MapFamily make_family(const std::string& name, const std::string& a) {
  std::vector<Rational> fixed;
  if (!a.empty()) fixed.push_back(parse_rational(a));
  return builtin(name, fixed);
}

}  // namespace

PYBIND11_MODULE(_orbitkit, m) {
  m.doc() = "Exact + numerical bifurcation toolkit for polynomial map families";
  m.attr("__version__") = kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownFamily>(m, "UnknownFamily", PyExc_ValueError);
  py::register_exception<MissingFixedParam>(m, "MissingFixedParam", PyExc_ValueError);
  py::register_exception<PeriodCapExceeded>(m, "PeriodCapExceeded", PyExc_ValueError);
  py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);

  py::class_<MapFamily>(m, "MapFamily")
      .def_readonly("name", &MapFamily::name)
      .def_readonly("param_name", &MapFamily::param_name)
      .def("iterate",
           [](const MapFamily& f, double t, double x, int n) {
             return f.iterate(t, x, n);
           },
           py::arg("t"), py::arg("x"), py::arg("n") = 1)
      .def("__repr__",
           [](const MapFamily& f) { return "<MapFamily " + f.name + ">"; });

  m.def("family", &make_family, py::arg("name"), py::arg("a") = std::string(),
        "Construct a built-in family; a is the fixed parameter as a rational "
        "string (required for S-fixed-a / T-fixed-a).");

  m.def(
      "count_period_points",
      [](const MapFamily& f, int n, const std::string& t) {
        PeriodCount pc = count_period_points(f, n, parse_rational(t));
        py::dict d;
        d["count"] = pc.count;
        d["lower_period"] = pc.lower_period_flag;
        d["degree_dropped"] = pc.degree_dropped;
        return d;
      },
      py::arg("family"), py::arg("n"), py::arg("t"),
      "Exact number of distinct real points of least period n at parameter t "
      "(a rational string).");

  m.def(
      "tangent_parameters",
      [](const MapFamily& f, int n, bool positive_only) {
        TangentLocus l = tangent_parameters(f, n, positive_only);
        std::vector<double> out;
        for (AlgebraicRoot r : l.params) {
          r.refine(Rational(1, Integer(1) << 48));
          out.push_back(r.approx());
        }
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("positive_only") = true,
      "Certified parameters where the period-n divisor polynomial has a real "
      "multiple root.");

  m.def(
      "detect",
      [](const MapFamily& f, int n, const std::string& lo, const std::string& hi) {
        auto reports =
            detect(f, n, Interval{parse_rational(lo), parse_rational(hi)});
        std::vector<std::string> out;
        for (const auto& r : reports) out.push_back(bubble_report_json(r));
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("lo"), py::arg("hi"),
      "Bubble / point bifurcation reports over a parameter range, one JSON "
      "string per report.");

  m.def(
      "bubble_closed_form_sqrt",
      [](const std::string& a_squared, int n) {
        auto sq = parse_rational(a_squared);
        return bubble_report_json(bubble_closed_form(AlgebraicRoot::sqrt_of(sq), n));
      },
      py::arg("a_squared"), py::arg("n") = 3,
      "Closed-form report for the family a - c(1 + x^2) with a = sqrt(a_squared).");

  m.def(
      "bubble_closed_form",
      [](const std::string& a, int n) {
        return bubble_report_json(bubble_closed_form(parse_rational(a), n));
      },
      py::arg("a"), py::arg("n") = 3,
      "Closed-form report for the family a - c(1 + x^2) with rational a.");

  m.def(
      "continue_branch",
      [](const MapFamily& f, int n, const std::string& anchor, double lo, double hi) {
        auto seeds = seed_orbits(f, n, parse_rational(anchor));
        py::list branches;
        for (const auto& s : seeds) {
          OrbitBranch b = continue_branch(f, n, s, lo, hi);
          py::dict d;
          py::list pts, evs;
          for (const auto& p : b.points)
            pts.append(py::make_tuple(p.param, p.cycle, p.multiplier, p.residual));
          for (const auto& e : b.events)
            evs.append(py::make_tuple(to_string(e.kind), e.param));
          d["points"] = pts;
          d["events"] = evs;
          branches.append(d);
        }
        return branches;
      },
      py::arg("family"), py::arg("n"), py::arg("anchor"), py::arg("lo"),
      py::arg("hi"),
      "Seed period-n orbits exactly at a rational anchor parameter and track "
      "each across [lo, hi]; returns per-branch points and events.");

  m.def(
      "orbit_diagram_csv",
      [](const MapFamily& f, double lo, double hi, int n_params, int transient,
         int keep) {
        DiagramSettings s;
        s.n_params = n_params;
        s.transient = transient;
        s.keep = keep;
        std::ostringstream os;
        write_csv(orbit_diagram(f, lo, hi, s), os);
        return os.str();
      },
      py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("n_params") = 500,
      py::arg("transient") = 500, py::arg("keep") = 100,
      "Orbit diagram samples as CSV text (param,x rows).");

  m.def(
      "effective_alpha",
      [](const MapFamily& f, const std::string& t) {
        return to_string(effective_alpha(f, parse_rational(t)));
      },
      py::arg("family"), py::arg("t"),
      "Exact normal-form parameter (as a rational string) of a family at t.");
}
