// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/continuation.hpp"

#include <algorithm>
#include <cmath>

#include "orbitkit/period_analysis.hpp"

namespace orbitkit {

SpecializedMap::SpecializedMap(const MapFamily& f, double t) {
  c.resize(f.rule.coeffs().size());
  for (size_t j = 0; j < c.size(); ++j) c[j] = f.rule.coeffs()[j].eval(t);
}

double SpecializedMap::eval(double x) const {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double SpecializedMap::deriv(double x) const {
  double acc = 0;
  for (size_t j = c.size(); j-- > 1;) acc = acc * x + j * c[j];
  return acc;
}

std::string to_string(BifurcationEvent::Kind k) {
  switch (k) {
    case BifurcationEvent::Kind::fold: return "fold";
    case BifurcationEvent::Kind::flip: return "flip";
    case BifurcationEvent::Kind::bubble_open: return "bubble-open";
    case BifurcationEvent::Kind::bubble_close: return "bubble-close";
    case BifurcationEvent::Kind::point: return "point";
    case BifurcationEvent::Kind::cycle_mismatch: return "cycle-mismatch";
  }
  return "?";
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::attracting: return "attracting";
    case Stability::repelling: return "repelling";
    case Stability::neutral: return "neutral";
  }
  return "?";
}

namespace {

OrbitPoint make_orbit(const SpecializedMap& m, int n, double t, double x0) {
  OrbitPoint p;
  p.param = t;
  p.cycle.resize(n);
  double x = x0;
  for (int i = 0; i < n; ++i) {
    p.cycle[i] = x;
    x = m.eval(x);
  }
  p.residual = 0;
  p.multiplier = 1;
  for (int i = 0; i < n; ++i) {
    double next = m.eval(p.cycle[i]);
    double target = p.cycle[(i + 1) % n];
    p.residual = std::max(p.residual, std::abs(next - target));
    p.multiplier *= m.deriv(p.cycle[i]);
  }
  return p;
}

}  // namespace

OrbitPoint newton_orbit(const MapFamily& f, int n, double t, double guess,
                        double newton_tol, int max_iter) {
  SpecializedMap m(f, t);
  double x = guess;
  for (int it = 0; it < max_iter; ++it) {
    // g(x) = f^n(x) - x, derivative by chain rule
    double y = x, d = 1;
    for (int i = 0; i < n; ++i) {
      d *= m.deriv(y);
      y = m.eval(y);
    }
    double g = y - x;
    double gp = d - 1;
    if (std::abs(g) <= newton_tol) {
      OrbitPoint p = make_orbit(m, n, t, x);
      if (p.residual <= newton_tol) return p;
    }
    if (std::abs(gp) < 1e-13)
      throw DerivativeNearZero("(f^n - id)' nearly singular; tangency suspected");
    x -= g / gp;
    if (!std::isfinite(x)) throw NoConvergence("newton iterate diverged");
  }
  throw NoConvergence("newton did not converge in max_iter iterations");
}

OrbitBranch continue_branch(const MapFamily& f, int n, const OrbitPoint& start,
                            double t_lo, double t_hi, const ContinuationOptions& opts) {
  if (start.residual > opts.newton_tol)
    throw StartNotConverged("starting orbit residual above newton_tol");
  OrbitBranch branch;
  branch.family = f.name;
  branch.period = n;
  branch.points.push_back(start);
  double target = (start.param - t_lo >= t_hi - start.param) ? t_lo : t_hi;
  if (target == start.param) return branch;
  double dir = target > start.param ? 1.0 : -1.0;
  double step = opts.step0;

  auto solve_at = [&](double t, double guess) {
    return newton_orbit(f, n, t, guess, opts.newton_tol, opts.max_iter);
  };

  while (true) {
    const OrbitPoint& last = branch.points.back();
    if (dir * (target - last.param) <= 0) break;
    double t = last.param + dir * step;
    if (dir * (t - target) > 0) t = target;
    bool ok = false;
    OrbitPoint next;
    try {
      next = solve_at(t, last.cycle[0]);
      // Past a fold, Newton on f^n - id lands on a lower-period orbit (cycle
      // entries collapse). That is not a valid period-n continuation point.
      for (size_t i = 0; i < next.cycle.size(); ++i)
        for (size_t j = i + 1; j < next.cycle.size(); ++j)
          if (std::abs(next.cycle[i] - next.cycle[j]) < 1e-8)
            throw NoConvergence("converged to a lower-period orbit");
      // Guard against silently jumping to a different cycle.
      double slope = 1.0;
      if (branch.points.size() >= 2) {
        const OrbitPoint& prev = branch.points[branch.points.size() - 2];
        double dt = std::abs(last.param - prev.param);
        if (dt > 0) slope = std::max(1.0, std::abs(last.cycle[0] - prev.cycle[0]) / dt);
      }
      double continuity_tol = 10.0 * std::abs(t - last.param) * slope + 1e-9;
      if (std::abs(next.cycle[0] - last.cycle[0]) > continuity_tol) {
        branch.events.push_back({BifurcationEvent::Kind::cycle_mismatch, last.param, n});
        break;
      }
      ok = true;
    } catch (const NoConvergence&) {
    } catch (const DerivativeNearZero&) {
    }
    if (!ok) {
      step /= 2;
      if (step < opts.step_floor) {
        branch.events.push_back({BifurcationEvent::Kind::fold, last.param, n});
        break;
      }
      continue;
    }
    // Multiplier crossings of +1 (fold) and -1 (flip), bisection-refined.
    for (double level : {1.0, -1.0}) {
      double a = last.multiplier - level, b = next.multiplier - level;
      if (a == 0 || b == 0 || a * b > 0) continue;
      double tl = last.param, th = next.param, xl = last.cycle[0], xh = next.cycle[0];
      while (std::abs(th - tl) > opts.event_tol) {
        double tm = (tl + th) / 2;
        try {
          OrbitPoint mid = solve_at(tm, (xl + xh) / 2);
          if ((mid.multiplier - level) * a > 0) {
            tl = tm;
            xl = mid.cycle[0];
          } else {
            th = tm;
            xh = mid.cycle[0];
          }
        } catch (const std::runtime_error&) {
          break;
        }
      }
      branch.events.push_back(
          {level > 0 ? BifurcationEvent::Kind::fold : BifurcationEvent::Kind::flip,
           (tl + th) / 2, n});
    }
    branch.points.push_back(std::move(next));
    if (step < opts.step0) step = std::min(opts.step0, step * 2);
  }
  return branch;
}

Stability classify_stability(const OrbitPoint& p, double event_tol) {
  double a = std::abs(p.multiplier);
  if (a < 1 - event_tol) return Stability::attracting;
  if (a > 1 + event_tol) return Stability::repelling;
  return Stability::neutral;
}

std::vector<OrbitPoint> seed_orbits(const MapFamily& f, int n, const Rational& t,
                                    double newton_tol) {
  UniPoly spec = dynatomic(f, n).phi.eval_t(t);
  std::vector<OrbitPoint> out;
  double td = to_double(t);
  for (const AlgebraicRoot& r : isolate_real_roots(spec)) {
    OrbitPoint p = newton_orbit(f, n, td, r.approx(), newton_tol);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<OrbitPoint>> group_cycles(const std::vector<OrbitPoint>& pts,
                                                  double tol) {
  std::vector<std::vector<OrbitPoint>> cycles;
  for (const OrbitPoint& p : pts) {
    bool placed = false;
    for (auto& cyc : cycles) {
      for (double x : cyc.front().cycle) {
        if (std::abs(x - p.cycle[0]) < tol) {
          cyc.push_back(p);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) cycles.push_back({p});
  }
  return cycles;
}

}  // namespace orbitkit
