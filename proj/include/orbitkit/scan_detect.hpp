// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_SCAN_DETECT_HPP
#define ORBITKIT_SCAN_DETECT_HPP

#include <variant>
#include <vector>

#include "orbitkit/period_analysis.hpp"

namespace orbitkit {

struct CountsEqualAtEndpoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ParamValue = std::variant<Rational, AlgebraicRoot>;

enum class BubbleKind { bubble, point, none };
std::string to_string(BubbleKind k);

struct BubbleEndpoint {
  double value = 0;
  std::optional<AlgebraicRoot> exact;
};

struct CountGrid {
  std::vector<Rational> params;
  std::vector<PeriodCount> counts;
};

struct BubbleReport {
  std::string family;
  int n = 0;
  BubbleKind kind = BubbleKind::none;
  BubbleEndpoint lo, hi;  // coincide for kind == point
  std::string method;     // "closed-form" or "scan"
  bool certified = false;
  // Scan-refined endpoint midpoints, when a scan was run (cross-check of the
  // closed form, or the primary source for method == "scan").
  std::optional<double> scan_lo, scan_hi;
  CountGrid witness;
  std::string notes;
};

/// Theorem-2/3 style closed form for T_{a,c} = a - c(1+x^2): solves
/// (a-c)c = alpha* with alpha* = 7/4 (n=3) or 3/4 (n=2). Exact comparisons;
/// `a` may be rational or a pure square root.
BubbleReport bubble_closed_form(const ParamValue& a, int n);

CountGrid scan_counts(const MapFamily& f, int n, const Interval& range, int grid);

// Bisection on the exact count function; counts must differ at the endpoints.
Interval refine_transition(const MapFamily& f, int n, Interval bracket,
                           const Rational& width_tol);

struct DetectOptions {
  Rational point_tol = Rational(1, 1000000000);
  int grid = 97;
  bool use_closed_form = true;
};

/// Full pipeline: scan -> transitions -> refine -> classify, plus tangent-locus
/// candidates for point bifurcations that a grid cannot see.
std::vector<BubbleReport> detect(const MapFamily& f, int n, const Interval& range,
                                 const DetectOptions& opts = {});

std::string bubble_report_json(const BubbleReport& r);

}  // namespace orbitkit

#endif
