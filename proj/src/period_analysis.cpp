// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/period_analysis.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace orbitkit {

namespace {

std::vector<int> proper_divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k < n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

ParamPoly iterate_rule(const MapFamily& f, int n) {
  ParamPoly acc = f.rule;
  for (int i = 1; i < n; ++i) acc = f.rule.compose_x(acc);
  return acc;
}

// True when u vanishes at the root represented by r.
bool vanishes_at(const UniPoly& u, const AlgebraicRoot& r) {
  if (u.is_zero()) return true;
  if (r.is_rational()) return u.eval(r.rational_value()) == 0;
  UniPoly g = gcd(u, r.defining());
  if (g.degree() < 1) return false;
  return sturm_count(g, r.isolator().lo, r.isolator().hi) > 0;
}

}  // namespace

DynatomicResult dynatomic(const MapFamily& f, int n) {
  if (n < 1) throw std::invalid_argument("period must be >= 1");
  if (n > kPeriodCap) throw PeriodCapExceeded("period cap is " + std::to_string(kPeriodCap));
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, DynatomicResult> cache;
  std::pair<std::string, int> key{f.rule.str(), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ParamPoly phi = iterate_rule(f, n) - ParamPoly::x();
  for (int d : proper_divisors(n)) phi = phi.divide_exact(dynatomic(f, d).phi);
  DynatomicResult out{n, phi, true};
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, out);
  return out;
}

PeriodCount count_period_points(const MapFamily& f, int n, const Rational& t) {
  DynatomicResult dyn = dynatomic(f, n);
  UniPoly spec = dyn.phi.eval_t(t);
  PeriodCount out;
  out.degree_dropped = dyn.phi.leading().eval(t) == 0;
  if (spec.is_zero())
    throw std::runtime_error("dynatomic polynomial vanishes identically at this parameter");
  out.count = spec.degree() >= 1 ? sturm_count(spec) : 0;
  for (int d : proper_divisors(n)) {
    UniPoly lower = dynatomic(f, d).phi.eval_t(t);
    if (!lower.is_zero() && gcd(spec, lower).degree() >= 1) {
      out.lower_period_flag = true;
      break;
    }
  }
  return out;
}

TangentLocus tangent_parameters(const MapFamily& f, int n, bool positive_only) {
  DynatomicResult dyn = dynatomic(f, n);
  ParamPoly dphi = dyn.phi.derivative_x();
  SubresultantChain chain = subresultants_x(dyn.phi, dphi);
  TangentLocus out;
  out.n = n;
  out.certificate = chain.resultant;
  if (out.certificate.is_zero())
    throw std::runtime_error("resultant vanishes identically; dynatomic not squarefree over Q(t)");
  const UniPoly& lead = dyn.phi.leading();
  for (AlgebraicRoot& root : isolate_real_roots(out.certificate)) {
    if (positive_only && root.sign() <= 0) continue;
    // Degenerate parameter: the leading coefficient vanishes there too.
    if (vanishes_at(lead, root)) continue;
    // Shrink until no root of the leading coefficient sits in the isolator,
    // so real-root counts can only change at the candidate itself.
    while (!root.is_rational() && lead.degree() >= 1 &&
           sturm_count(lead, root.isolator().lo, root.isolator().hi) > 0)
      root.refine(root.isolator().width() / 4);

    bool certified = false;
    Rational lo = root.isolator().lo, hi = root.isolator().hi;
    if (root.is_rational()) {
      // Pick a bracket around the exact value free of other certificate or
      // leading-coefficient roots.
      const Rational v = root.rational_value();
      UniPoly cert_sf = squarefree_part(out.certificate);
      Rational w(1, 1024);
      while (sturm_count(cert_sf, v - w, v + w) > 1 ||
             (lead.degree() >= 1 && sturm_count(lead, v - w, v + w) > 0))
        w /= 2;
      lo = v - w;
      hi = v + w;
    }
    UniPoly at_lo = dyn.phi.eval_t(lo);
    UniPoly at_hi = dyn.phi.eval_t(hi);
    if (!at_lo.is_zero() && !at_hi.is_zero() && sturm_count(at_lo) != sturm_count(at_hi)) {
      certified = true;
    } else {
      // Bracket counts agree; decide via the gcd degree at the candidate:
      // smallest j with nonzero principal subresultant coefficient. An odd
      // gcd degree forces a real common root of phi and dphi/dx.
      size_t j = 1;
      while (j < chain.chain.size() && vanishes_at(chain.principal(j), root)) ++j;
      if (j < chain.chain.size() && j % 2 == 1) certified = true;
    }
    if (certified) out.params.push_back(root);
  }
  return out;
}

std::optional<UniPoly> square_certificate(const MapFamily& f, int n, const Rational& t0) {
  UniPoly spec = dynatomic(f, n).phi.eval_t(t0);
  if (spec.is_zero()) return std::nullopt;
  return perfect_square_decompose(spec);
}

}  // namespace orbitkit
