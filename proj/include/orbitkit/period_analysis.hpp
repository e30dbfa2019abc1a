// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_PERIOD_ANALYSIS_HPP
#define ORBITKIT_PERIOD_ANALYSIS_HPP

#include <vector>

#include "orbitkit/map_family.hpp"

namespace orbitkit {

struct PeriodCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kPeriodCap = 6;

/// Period-n divisor polynomial: f_t^n(x) - x with all proper-divisor factors
/// divided out (exactly, remainder verified zero).
struct DynatomicResult {
  int n = 0;
  ParamPoly phi;
  bool factor_checked = false;
};

struct PeriodCount {
  int count = 0;
  // A root of lower exact period is among the roots (flip-style degeneracy).
  bool lower_period_flag = false;
  // Specialization dropped degree (leading coefficient vanished at t).
  bool degree_dropped = false;
};

struct TangentLocus {
  int n = 0;
  std::vector<AlgebraicRoot> params;
  UniPoly certificate;  // resultant_x(phi, dphi/dx), polynomial in t
};

DynatomicResult dynatomic(const MapFamily& f, int n);

PeriodCount count_period_points(const MapFamily& f, int n, const Rational& t);

// Parameters where phi(t,.) has a real multiple root. Each candidate (a real
// root of the resultant certificate) is kept only when certified: either the
// distinct-real-root count differs across a bracketing rational pair, or the
// gcd of phi and dphi/dx at the candidate has odd degree (forcing a real
// common root).
TangentLocus tangent_parameters(const MapFamily& f, int n, bool positive_only = true);

std::optional<UniPoly> square_certificate(const MapFamily& f, int n, const Rational& t0);

}  // namespace orbitkit

#endif
