// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "orbitkit/roots.hpp"

using namespace orbitkit;

TEST_CASE("isolate_real_roots finds all distinct real roots, sorted") {
  // (x-1)(x-2)(x+3), with a squared factor to exercise squarefree reduction
  UniPoly base({Rational(6), Rational(-7), Rational(0), Rational(1)});
  UniPoly p = base * UniPoly({Rational(-1), Rational(1)});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  double expect[] = {-3.0, 1.0, 2.0};
  for (size_t i = 0; i < 3; ++i) {
    AlgebraicRoot r = roots[i];
    r.refine(Rational(1, 1 << 20));
    CHECK(r.approx() == doctest::Approx(expect[i]).epsilon(1e-5));
  }
  // Isolating intervals are pairwise disjoint (half-open semantics).
  for (size_t i = 1; i < roots.size(); ++i)
    CHECK(roots[i - 1].isolator().hi <= roots[i].isolator().lo);
}

TEST_CASE("no real roots") {
  CHECK(isolate_real_roots(UniPoly({Rational(1), Rational(0), Rational(1)})).empty());
}

TEST_CASE("sqrt_of refines to the positive square root") {
  AlgebraicRoot r = AlgebraicRoot::sqrt_of(Rational(2));
  r.refine(Rational(1, Integer(1) << 48));
  CHECK(r.approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.sign() == 1);
  CHECK(!r.is_rational());
  CHECK(r.square_if_pure_sqrt() == Rational(2));
}

TEST_CASE("rational roots are recognized exactly") {
  AlgebraicRoot r = AlgebraicRoot::from_rational(Rational(7, 4));
  CHECK(r.is_rational());
  CHECK(r.rational_value() == Rational(7, 4));
  CHECK(r.approx() == doctest::Approx(1.75));
  CHECK(r.sign() == 1);

  // sqrt of a perfect rational square collapses to a rational
  AlgebraicRoot s = AlgebraicRoot::sqrt_of(Rational(9, 4));
  CHECK(s.is_rational());
  CHECK(s.rational_value() == Rational(3, 2));
}

TEST_CASE("sign of a negative irrational root") {
  // x^2 - 2 has roots +-sqrt(2); isolate and check the negative one
  auto roots = isolate_real_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].sign() == -1);
  CHECK(roots[1].sign() == 1);
}

TEST_CASE("refine preserves the root and shrinks the interval") {
  auto roots = isolate_real_roots(
      UniPoly({Rational(-1), Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)}));
  REQUIRE(!roots.empty());
  for (AlgebraicRoot r : roots) {
    Interval before = r.isolator();
    r.refine(before.width() / 1024);
    CHECK(r.isolator().width() <= before.width() / 1024);
    CHECK(before.lo <= r.isolator().lo);
    CHECK(r.isolator().hi <= before.hi);
    // root stays inside: p changes sign over (lo, hi] or hi is the root
    const UniPoly& p = r.defining();
    bool root_at_hi = p.eval(r.isolator().hi) == 0;
    CHECK((root_at_hi || p.eval(r.isolator().lo) * p.eval(r.isolator().hi) < 0));
  }
}
