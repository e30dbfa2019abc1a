// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_ROOTS_HPP
#define ORBITKIT_ROOTS_HPP

#include <vector>

#include "orbitkit/unipoly.hpp"

namespace orbitkit {

struct Interval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// A real algebraic number: square-free defining polynomial plus an interval
/// (lo, hi] holding exactly one of its real roots.
class AlgebraicRoot {
 public:
  AlgebraicRoot(UniPoly defining, Interval isolator);

  const UniPoly& defining() const { return defining_; }
  const Interval& isolator() const { return isolator_; }

  // Shrinks the isolator until its width is <= w.
  void refine(const Rational& w);
  double approx() const;
  // Sign of the root itself; refines until decidable.
  int sign() const;
  bool is_rational() const { return rational_.has_value(); }
  const Rational& rational_value() const { return *rational_; }

  // Exact value of the root squared, when the defining polynomial is x^2 - r.
  std::optional<Rational> square_if_pure_sqrt() const;

  static AlgebraicRoot from_rational(const Rational& v);
  static AlgebraicRoot sqrt_of(const Rational& v);  // positive square root

 private:
  UniPoly defining_;
  mutable Interval isolator_;
  std::optional<Rational> rational_;
};

std::vector<AlgebraicRoot> isolate_real_roots(const UniPoly& p);

}  // namespace orbitkit

#endif
