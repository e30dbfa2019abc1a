// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "orbitkit/unipoly.hpp"

using namespace orbitkit;

namespace {
UniPoly P(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return UniPoly(std::move(v));
}
}  // namespace

TEST_CASE("parse_rational accepts fractions, integers, decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("2.658") == Rational(2658, 1000));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("sqrt_exact") {
  CHECK(sqrt_exact(Rational(9, 4)) == Rational(3, 2));
  CHECK(!sqrt_exact(Rational(2)).has_value());
  CHECK(!sqrt_exact(Rational(-1)).has_value());
  CHECK(sqrt_exact(Rational(0)) == Rational(0));
}

TEST_CASE("basic arithmetic and evaluation") {
  UniPoly p = P({1, 2, 3});  // 1 + 2x + 3x^2
  UniPoly q = P({0, 1});     // x
  CHECK((p + q) == P({1, 3, 3}));
  CHECK((p - p).is_zero());
  CHECK((p * q) == P({0, 1, 2, 3}));
  CHECK(p.eval(Rational(2)) == Rational(17));
  CHECK(p.eval(2.0) == doctest::Approx(17.0));
  CHECK(p.degree() == 2);
  CHECK(p.leading() == Rational(3));
  CHECK(p[5] == Rational(0));
}

TEST_CASE("derivative, compose, pow") {
  UniPoly p = P({1, 0, -1});  // 1 - x^2
  CHECK(p.derivative() == P({0, -2}));
  // p(p(x)) = 1 - (1 - x^2)^2 = 2x^2 - x^4
  CHECK(p.compose(p) == P({0, 0, 2, 0, -1}));
  CHECK(P({0, 1}).pow(3) == P({0, 0, 0, 1}));
  CHECK(P({2}).pow(0) == P({1}));
}

TEST_CASE("divmod and exact division") {
  UniPoly a = P({-1, 0, 0, 1});  // x^3 - 1
  UniPoly b = P({-1, 1});        // x - 1
  auto [q, r] = a.divmod(b);
  CHECK(q == P({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(a.divide_exact(b) == q);
  CHECK_THROWS_AS(P({1, 0, 1}).divide_exact(b), NonzeroRemainder);
}

TEST_CASE("gcd is monic, squarefree part strips multiplicity") {
  UniPoly a = P({-1, 1}) * P({-1, 1}) * P({-2, 1});
  UniPoly b = P({-1, 1}) * P({-3, 1});
  CHECK(gcd(a, b) == P({-1, 1}));
  CHECK(squarefree_part(a) == Rational(1) / a.leading() * (P({-1, 1}) * P({-2, 1})));
  CHECK(squarefree_part(P({-1, 1})) == P({-1, 1}));
}

TEST_CASE("descartes and sturm counts") {
  // (x-1)(x-2)(x+3) = x^3 - 7x + 6
  UniPoly p = P({6, -7, 0, 1});
  CHECK(descartes_changes(p) == 2);
  CHECK(sturm_count(p) == 3);
  CHECK(sturm_count(p, Rational(0), Rational(5)) == 2);   // roots 1, 2
  CHECK(sturm_count(p, Rational(1), Rational(2)) == 1);   // (1,2] excludes 1
  CHECK(sturm_count(p, Rational(0), Rational(1)) == 1);   // (0,1] includes 1
  CHECK(sturm_count(P({1, 0, 1})) == 0);                  // x^2+1
  // Repeated roots still count once.
  CHECK(sturm_count(P({-1, 1}) * P({-1, 1})) == 1);
}

TEST_CASE("perfect square recognition") {
  UniPoly q = P({1, -2, 3});
  auto s = perfect_square_decompose(q * q);
  REQUIRE(s.has_value());
  CHECK(*s * *s == q * q);
  CHECK(s->leading() > 0);
  CHECK(!perfect_square_decompose(P({1, 1})).has_value());
  CHECK(!perfect_square_decompose(q * q + P({1})).has_value());
}

TEST_CASE("cauchy bound encloses all roots") {
  UniPoly p = P({6, -7, 0, 1});  // roots 1, 2, -3
  Rational b = cauchy_bound(p);
  CHECK(b > 3);
  CHECK(sturm_count(p, -b, b) == 3);
}
