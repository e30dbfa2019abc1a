// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "orbitkit/period_analysis.hpp"

using namespace orbitkit;

TEST_CASE("dynatomic degrees for the quadratic normal form") {
  MapFamily f = builtin("quadratic-normal");
  CHECK(dynatomic(f, 1).phi.degree_x() == 2);
  CHECK(dynatomic(f, 2).phi.degree_x() == 2);
  CHECK(dynatomic(f, 3).phi.degree_x() == 6);
  CHECK(dynatomic(f, 3).factor_checked);
  // degree of the period-n divisor polynomial: sum over d | n of mu(n/d) 2^d
  CHECK(dynatomic(f, 4).phi.degree_x() == 12);
  CHECK(dynatomic(f, 6).phi.degree_x() == 54);
  CHECK_THROWS_AS(dynatomic(f, 7), PeriodCapExceeded);
  CHECK_THROWS(dynatomic(f, 0));
}

TEST_CASE("dynatomic roots really have period n") {
  MapFamily f = builtin("quadratic-normal");
  // For the quadratic family f^3(x) - x factors exactly as phi1 * phi3.
  ParamPoly x = ParamPoly::x();
  ParamPoly f3 = f.rule.compose_x(f.rule).compose_x(f.rule);
  CHECK(dynatomic(f, 1).phi * dynatomic(f, 3).phi == f3 - x);
}

TEST_CASE("period-3 counts across the tangency at alpha = 7/4") {
  MapFamily f = builtin("quadratic-normal");
  CHECK(count_period_points(f, 3, Rational(1)).count == 0);
  CHECK(count_period_points(f, 3, Rational(7, 4)).count == 3);
  CHECK(count_period_points(f, 3, Rational(2)).count == 6);
  CHECK(count_period_points(f, 3, Rational(9, 5)).count == 6);
}

TEST_CASE("period-2 counts across alpha = 3/4") {
  MapFamily f = builtin("quadratic-normal");
  CHECK(count_period_points(f, 2, Rational(1, 2)).count == 0);
  CHECK(count_period_points(f, 2, Rational(3, 4)).count == 1);
  CHECK(count_period_points(f, 2, Rational(1)).count == 2);
  // at 3/4 the double root is also a fixed point (flip degeneracy)
  CHECK(count_period_points(f, 2, Rational(3, 4)).lower_period_flag);
  CHECK(!count_period_points(f, 2, Rational(1)).lower_period_flag);
}

TEST_CASE("tangent locus of the quadratic normal form") {
  MapFamily f = builtin("quadratic-normal");
  TangentLocus l3 = tangent_parameters(f, 3);
  REQUIRE(l3.params.size() == 1);
  CHECK(l3.params[0].is_rational());
  CHECK(l3.params[0].rational_value() == Rational(7, 4));

  TangentLocus l2 = tangent_parameters(f, 2, false);
  REQUIRE(l2.params.size() == 1);
  CHECK(l2.params[0].rational_value() == Rational(3, 4));
}

TEST_CASE("square certificate at the period-3 tangency") {
  MapFamily f = builtin("quadratic-normal");
  auto q = square_certificate(f, 3, Rational(7, 4));
  REQUIRE(q.has_value());
  // phi3 specialized at 7/4 equals q^2 (up to the stored normalization)
  UniPoly spec = dynatomic(f, 3).phi.eval_t(Rational(7, 4));
  CHECK(*q * *q == spec);
  CHECK(!square_certificate(f, 3, Rational(2)).has_value());
}

TEST_CASE("degree drop is reported for degenerate parameters") {
  // logistic at mu = 0 degenerates to the zero map
  MapFamily f = builtin("logistic");
  PeriodCount pc = count_period_points(f, 2, Rational(0));
  CHECK(pc.degree_dropped);
}
