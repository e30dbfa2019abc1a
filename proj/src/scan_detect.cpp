// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/scan_detect.hpp"

#include <algorithm>

#include <json.hpp>

#include "orbitkit/version.hpp"

namespace orbitkit {

std::string to_string(BubbleKind k) {
  switch (k) {
    case BubbleKind::bubble: return "bubble";
    case BubbleKind::point: return "point";
    case BubbleKind::none: return "none";
  }
  return "?";
}

namespace {

BubbleEndpoint endpoint_from_root(AlgebraicRoot r) {
  r.refine(Rational(Integer(1), Integer(1) << 40));
  BubbleEndpoint e;
  e.value = r.approx();
  e.exact = std::move(r);
  return e;
}

Rational alpha_star(int n) {
  if (n == 3) return Rational(7, 4);
  if (n == 2) return Rational(3, 4);
  throw std::invalid_argument("closed form exists for n in {2, 3} only");
}

}  // namespace

BubbleReport bubble_closed_form(const ParamValue& a, int n) {
  const Rational as = alpha_star(n);
  Rational a_sq;
  std::optional<Rational> a_rat;
  if (std::holds_alternative<Rational>(a)) {
    a_rat = std::get<Rational>(a);
    if (*a_rat <= 0) throw std::invalid_argument("closed form requires a > 0");
    a_sq = *a_rat * *a_rat;
  } else {
    const AlgebraicRoot& ar = std::get<AlgebraicRoot>(a);
    if (ar.sign() <= 0) throw std::invalid_argument("closed form requires a > 0");
    if (ar.is_rational()) {
      a_rat = ar.rational_value();
      a_sq = *a_rat * *a_rat;
    } else if (auto sq = ar.square_if_pure_sqrt()) {
      a_sq = *sq;
    } else {
      throw std::invalid_argument("closed form supports rational or pure-sqrt a only");
    }
  }

  BubbleReport rep;
  rep.family = "T-fixed-a";
  rep.n = n;
  rep.method = "closed-form";
  rep.certified = true;
  Rational disc = a_sq - 4 * as;  // sign decides bubble vs point vs none
  if (disc < 0) {
    rep.kind = BubbleKind::none;
    rep.notes = "a^2 < 4*alpha*: no period-" + std::to_string(n) + " orbits";
    return rep;
  }
  if (disc == 0) {
    rep.kind = BubbleKind::point;
    if (a_rat) {
      rep.lo = rep.hi = endpoint_from_root(AlgebraicRoot::from_rational(*a_rat / 2));
    } else {
      // c = a/2 with a = sqrt(a_sq): defining x^2 - a_sq/4, positive root
      UniPoly def({-a_sq / 4, Rational(0), Rational(1)});
      for (AlgebraicRoot& r : isolate_real_roots(def))
        if (r.sign() > 0) rep.lo = rep.hi = endpoint_from_root(std::move(r));
    }
    return rep;
  }
  rep.kind = BubbleKind::bubble;
  std::vector<AlgebraicRoot> roots;
  if (a_rat) {
    // c^2 - a c + alpha* = 0
    roots = isolate_real_roots(UniPoly({as, -*a_rat, Rational(1)}));
  } else {
    // (c^2 + alpha*)^2 = a^2 c^2; positive roots are the endpoints
    UniPoly quartic({as * as, Rational(0), 2 * as - a_sq, Rational(0), Rational(1)});
    for (AlgebraicRoot& r : isolate_real_roots(quartic))
      if (r.sign() > 0) roots.push_back(std::move(r));
  }
  if (roots.size() != 2) throw std::logic_error("expected two closed-form endpoints");
  rep.lo = endpoint_from_root(std::move(roots[0]));
  rep.hi = endpoint_from_root(std::move(roots[1]));
  return rep;
}

CountGrid scan_counts(const MapFamily& f, int n, const Interval& range, int grid) {
  CountGrid out;
  if (range.lo == range.hi) {
    out.params.push_back(range.lo);
    out.counts.push_back(count_period_points(f, n, range.lo));
    return out;
  }
  if (grid < 2) throw std::invalid_argument("grid must be >= 2");
  for (int i = 0; i < grid; ++i) {
    Rational t = range.lo + Rational(i) * (range.hi - range.lo) / Rational(grid - 1);
    out.params.push_back(t);
    out.counts.push_back(count_period_points(f, n, t));
  }
  return out;
}

Interval refine_transition(const MapFamily& f, int n, Interval bracket,
                           const Rational& width_tol) {
  int c_lo = count_period_points(f, n, bracket.lo).count;
  int c_hi = count_period_points(f, n, bracket.hi).count;
  if (c_lo == c_hi)
    throw CountsEqualAtEndpoints("period-point counts agree at both bracket endpoints");
  while (bracket.width() > width_tol) {
    Rational mid = bracket.mid();
    if (count_period_points(f, n, mid).count == c_lo)
      bracket.lo = mid;
    else
      bracket.hi = mid;
  }
  return bracket;
}

namespace {

// Exact flank check for a point candidate: counts vanish at +-1e-3 and +-1e-6
// around a rational stand-in for the parameter.
bool flanks_vanish(const MapFamily& f, int n, const Rational& m) {
  for (const Rational& d : {Rational(1, 1000), Rational(1, 1000000)}) {
    if (count_period_points(f, n, m - d).count != 0) return false;
    if (count_period_points(f, n, m + d).count != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<BubbleReport> detect(const MapFamily& f, int n, const Interval& range,
                                 const DetectOptions& opts) {
  std::vector<BubbleReport> reports;
  const Rational width_tol = opts.point_tol / 16;

  if (opts.use_closed_form && f.name == "T-fixed-a" && (n == 2 || n == 3) &&
      f.fixed_param) {
    BubbleReport rep = bubble_closed_form(ParamValue(*f.fixed_param), n);
    rep.witness = scan_counts(f, n, range, opts.grid);
    if (rep.kind == BubbleKind::bubble) {
      // Cross-check: bisection on exact counts must land on the closed forms.
      Rational center = *f.fixed_param / 2;
      Interval left{rep.lo.exact->isolator().lo - width_tol, center};
      Interval right{center, rep.hi.exact->isolator().hi + width_tol};
      rep.scan_lo = to_double(refine_transition(f, n, left, width_tol).mid());
      rep.scan_hi = to_double(refine_transition(f, n, right, width_tol).mid());
    }
    reports.push_back(std::move(rep));
    return reports;
  }

  CountGrid grid = scan_counts(f, n, range, opts.grid);
  const int G = static_cast<int>(grid.params.size());

  // Maximal runs of positive counts.
  struct Run {
    int first, last;
  };
  std::vector<Run> runs;
  for (int i = 0; i < G;) {
    if (grid.counts[i].count > 0) {
      int j = i;
      while (j + 1 < G && grid.counts[j + 1].count > 0) ++j;
      runs.push_back({i, j});
      i = j + 1;
    } else {
      ++i;
    }
  }

  TangentLocus locus = tangent_parameters(f, n, /*positive_only=*/range.lo > 0);

  std::vector<Interval> run_spans;
  for (const Run& run : runs) {
    BubbleReport rep;
    rep.family = f.name;
    rep.n = n;
    rep.method = "scan";
    rep.witness = grid;
    bool left_open = run.first == 0;
    bool right_open = run.last == G - 1;
    if (left_open || right_open) {
      rep.kind = BubbleKind::none;
      rep.notes = "count positive at range edge: one-sided birth, not a bubble";
      rep.lo.value = to_double(grid.params[run.first]);
      rep.hi.value = to_double(grid.params[run.last]);
      if (!left_open) {
        Interval tr = refine_transition(
            f, n, {grid.params[run.first - 1], grid.params[run.first]}, width_tol);
        rep.lo.value = to_double(tr.mid());
        rep.notes += "; left transition refined";
        rep.scan_lo = rep.lo.value;
      }
      if (!right_open) {
        Interval tr = refine_transition(
            f, n, {grid.params[run.last], grid.params[run.last + 1]}, width_tol);
        rep.hi.value = to_double(tr.mid());
        rep.notes += "; right transition refined";
        rep.scan_hi = rep.hi.value;
      }
      reports.push_back(std::move(rep));
      continue;
    }
    Interval left = refine_transition(
        f, n, {grid.params[run.first - 1], grid.params[run.first]}, width_tol);
    Interval right = refine_transition(
        f, n, {grid.params[run.last], grid.params[run.last + 1]}, width_tol);
    rep.scan_lo = to_double(left.mid());
    rep.scan_hi = to_double(right.mid());
    rep.kind = (right.hi - left.lo <= opts.point_tol) ? BubbleKind::point : BubbleKind::bubble;
    rep.lo.value = *rep.scan_lo;
    rep.hi.value = *rep.scan_hi;
    // Attach exact endpoints where a certified tangent/flip parameter lands
    // inside the refined transition bracket.
    for (const AlgebraicRoot& r : locus.params) {
      AlgebraicRoot c = r;
      c.refine(width_tol);
      if (c.isolator().hi >= left.lo && c.isolator().lo <= left.hi) rep.lo.exact = c;
      if (c.isolator().hi >= right.lo && c.isolator().lo <= right.hi) rep.hi.exact = c;
    }
    rep.certified = rep.lo.exact && rep.hi.exact;
    run_spans.push_back({left.lo, right.hi});
    reports.push_back(std::move(rep));
  }

  // Point bifurcations are invisible to any finite grid: take certified
  // tangent parameters with vanishing flank counts.
  for (const AlgebraicRoot& r : locus.params) {
    AlgebraicRoot c = r;
    c.refine(Rational(Integer(1), Integer(1) << 40));
    if (c.isolator().hi < range.lo || c.isolator().lo > range.hi) continue;
    bool in_run = false;
    for (const Interval& s : run_spans)
      if (c.isolator().hi >= s.lo && c.isolator().lo <= s.hi) in_run = true;
    if (in_run) continue;
    if (!flanks_vanish(f, n, c.isolator().mid())) continue;
    BubbleReport rep;
    rep.family = f.name;
    rep.n = n;
    rep.method = "scan";
    rep.kind = BubbleKind::point;
    rep.certified = true;
    rep.lo = rep.hi = endpoint_from_root(std::move(c));
    rep.notes = "certified: resultant root with real multiple root and zero flank counts";
    reports.push_back(std::move(rep));
  }

  std::sort(reports.begin(), reports.end(),
            [](const BubbleReport& a, const BubbleReport& b) { return a.lo.value < b.lo.value; });
  return reports;
}

std::string bubble_report_json(const BubbleReport& r) {
  nlohmann::json j;
  j["tool_version"] = kVersion;
  j["family"] = r.family;
  j["period"] = r.n;
  j["kind"] = to_string(r.kind);
  j["interval_lo"] = r.lo.value;
  j["interval_hi"] = r.hi.value;
  j["method"] = r.method;
  nlohmann::json certs = nlohmann::json::array();
  for (const BubbleEndpoint* e : {&r.lo, &r.hi}) {
    if (!e->exact) continue;
    certs.push_back({{"defining", e->exact->defining().str("t")},
                     {"isolator_lo", to_double(e->exact->isolator().lo)},
                     {"isolator_hi", to_double(e->exact->isolator().hi)}});
  }
  j["certificates"] = certs;
  j["certified"] = r.certified;
  if (r.scan_lo) j["scan_lo"] = *r.scan_lo;
  if (r.scan_hi) j["scan_hi"] = *r.scan_hi;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.witness.params.empty()) {
    nlohmann::json grid = nlohmann::json::array();
    for (size_t i = 0; i < r.witness.params.size(); ++i)
      grid.push_back({{"param", to_double(r.witness.params[i])},
                      {"count", r.witness.counts[i].count},
                      {"lower_period", r.witness.counts[i].lower_period_flag}});
    j["count_grid"] = grid;
  }
  return j.dump(2);
}

}  // namespace orbitkit
