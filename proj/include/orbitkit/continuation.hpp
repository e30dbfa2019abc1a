// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_CONTINUATION_HPP
#define ORBITKIT_CONTINUATION_HPP

#include <string>
#include <vector>

#include "orbitkit/map_family.hpp"

namespace orbitkit {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DerivativeNearZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StartNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContinuationOptions {
  double newton_tol = 1e-12;
  double event_tol = 1e-8;
  double step0 = 1e-3;
  int max_iter = 64;
  double step_floor = 1e-9;
};

struct OrbitPoint {
  double param = 0;
  std::vector<double> cycle;  // orbit ordered by iteration
  double multiplier = 0;      // product of f' along the cycle
  double residual = 0;        // max |f(x_i) - x_{i+1 mod n}|
};

struct BifurcationEvent {
  enum class Kind { fold, flip, bubble_open, bubble_close, point, cycle_mismatch };
  Kind kind;
  double param = 0;
  int period = 0;
};

std::string to_string(BifurcationEvent::Kind k);

struct OrbitBranch {
  std::string family;
  int period = 0;
  std::vector<OrbitPoint> points;
  std::vector<BifurcationEvent> events;
};

enum class Stability { attracting, repelling, neutral };
std::string to_string(Stability s);

/// Double-precision specialization of a family at a fixed parameter.
struct SpecializedMap {
  std::vector<double> c;  // ascending coefficients
  SpecializedMap(const MapFamily& f, double t);
  double eval(double x) const;
  double deriv(double x) const;
};

OrbitPoint newton_orbit(const MapFamily& f, int n, double t, double guess,
                        double newton_tol = 1e-12, int max_iter = 64);

/// Natural-parameter continuation from `start` toward the far end of t_range.
/// Newton failure halves the step; at the step floor the branch ends with a
/// fold event at the last accepted parameter. Multiplier crossings of +-1
/// between accepted points are bisection-refined and recorded.
OrbitBranch continue_branch(const MapFamily& f, int n, const OrbitPoint& start,
                            double t_lo, double t_hi,
                            const ContinuationOptions& opts = {});

Stability classify_stability(const OrbitPoint& p, double event_tol = 1e-8);

/// One converged orbit per real root of the period-n divisor polynomial at a
/// rational anchor parameter (exact isolation, then Newton polish).
std::vector<OrbitPoint> seed_orbits(const MapFamily& f, int n, const Rational& t,
                                    double newton_tol = 1e-12);

/// Group orbit points that lie on the same cycle.
std::vector<std::vector<OrbitPoint>> group_cycles(const std::vector<OrbitPoint>& pts,
                                                  double tol = 1e-7);

}  // namespace orbitkit

#endif
