// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_MAP_FAMILY_HPP
#define ORBITKIT_MAP_FAMILY_HPP

#include <optional>
#include <string>

#include "orbitkit/parampoly.hpp"
#include "orbitkit/roots.hpp"

namespace orbitkit {

struct UnknownFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingFixedParam : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateConjugacy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One-parameter polynomial map x -> rule(t, x), with an optional reduction
/// onto the normal form f_alpha(x) = 1 - alpha*x^2: the family at parameter t
/// is affinely conjugate to f at parameter reduction(t).
struct MapFamily {
  std::string name;
  ParamPoly rule;
  std::string param_name;
  std::optional<UniPoly> normal_form_reduction;  // polynomial in t
  std::optional<Rational> fixed_param;           // the fixed a for S/T families

  UniPoly specialize(const Rational& t) const { return rule.eval_t(t); }
  Rational iterate(const Rational& t, Rational x, int iterates) const;
  double iterate(double t, double x, int iterates) const;
};

/// Affine conjugacy h(x) = offset + scale*x between two concrete maps:
/// source o h == h o target must hold identically.
struct Conjugacy {
  UniPoly source;  // specialized map, polynomial in x
  UniPoly target;
  Rational offset, scale;  // scale != 0
};

// name in {quadratic-normal, S-fixed-a, T-fixed-a, logistic, cubic-exercise};
// S-fixed-a and T-fixed-a need the fixed parameter a.
MapFamily builtin(const std::string& name,
                  const std::vector<Rational>& fixed_params = {});

bool verify_conjugacy(const Conjugacy& c);

// Effective normal-form parameter of a family at t, exact.
Rational effective_alpha(const MapFamily& f, const Rational& t);

// Parse "family=<name>;a=<rational>" mini-format.
MapFamily parse_family_spec(const std::string& spec);

}  // namespace orbitkit

#endif
