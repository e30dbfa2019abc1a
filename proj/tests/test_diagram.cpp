// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "orbitkit/diagram.hpp"

using namespace orbitkit;

TEST_CASE("orbit diagram of the logistic map shows the 1- and 2-cycles") {
  MapFamily f = builtin("logistic");
  DiagramSettings s;
  s.n_params = 41;
  s.transient = 400;
  s.keep = 8;
  DiagramDataset d = orbit_diagram(f, 2.8, 3.2, s);
  REQUIRE(d.params.size() == 41);
  CHECK(d.params.front() == doctest::Approx(2.8));
  CHECK(d.params.back() == doctest::Approx(3.2));
  CHECK(d.escaped_params == 0);
  // mu = 2.8 (index 0): fixed point 1 - 1/mu
  for (double x : d.samples[0]) CHECK(x == doctest::Approx(1 - 1 / 2.8).epsilon(1e-6));
  // mu = 3.2 (last): the attracting 2-cycle has two distinct values
  double lo = 1e9, hi = -1e9;
  for (double x : d.samples.back()) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  CHECK(hi - lo > 0.2);
}

TEST_CASE("fixed seed overrides critical-point seeding") {
  MapFamily f = builtin("logistic");
  DiagramSettings s;
  s.n_params = 2;
  s.transient = 0;
  s.keep = 1;
  s.x0 = 0.25;
  DiagramDataset d = orbit_diagram(f, 2.0, 3.0, s);
  CHECK(d.samples[0][0] == doctest::Approx(0.25));
}

TEST_CASE("escaping orbits are flagged, not plotted") {
  MapFamily f = builtin("quadratic-normal");
  DiagramSettings s;
  s.n_params = 5;
  s.transient = 100;
  s.keep = 4;
  // alpha in [3, 4]: orbits of the critical point escape to -infinity
  DiagramDataset d = orbit_diagram(f, 3.0, 4.0, s);
  CHECK(d.escaped_params == 5);
  std::ostringstream os;
  write_csv(d, os);
  CHECK(os.str() == "param,x\n");
  CHECK_THROWS_AS(render_svg(d), EmptyDataset);
}

TEST_CASE("CSV format: header plus param,x rows in full precision") {
  MapFamily f = builtin("logistic");
  DiagramSettings s;
  s.n_params = 3;
  s.transient = 50;
  s.keep = 2;
  DiagramDataset d = orbit_diagram(f, 2.5, 2.7, s);
  std::ostringstream os;
  write_csv(d, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "param,x");
  int rows = 0;
  while (std::getline(is, line)) {
    CHECK(line.find(',') != std::string::npos);
    ++rows;
  }
  CHECK(rows == 3 * 2);
}

TEST_CASE("SVG output is a self-contained plot") {
  MapFamily f = builtin("logistic");
  DiagramSettings s;
  s.n_params = 10;
  s.transient = 50;
  s.keep = 3;
  DiagramDataset d = orbit_diagram(f, 2.5, 3.2, s);
  std::string svg = render_svg(d, 640, 480);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("width=\"640\"") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("input validation") {
  MapFamily f = builtin("logistic");
  DiagramSettings s;
  s.n_params = 1;
  CHECK_THROWS_AS(orbit_diagram(f, 0, 1, s), std::invalid_argument);
  s.n_params = 10;
  s.keep = 0;
  CHECK_THROWS_AS(orbit_diagram(f, 0, 1, s), std::invalid_argument);
}
