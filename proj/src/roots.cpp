// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/roots.hpp"

#include <algorithm>

namespace orbitkit {

namespace {

Rational rational_floor(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return Rational(q);
}

// The rational with the smallest denominator in the closed interval [lo, hi]
// (Stern-Brocot descent).
Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  Rational fl = rational_floor(lo);
  Rational cl = (fl == lo) ? lo : fl + 1;
  if (cl <= hi) return cl;
  return fl + Rational(1) / simplest_rational_in(Rational(1) / (hi - fl),
                                                 Rational(1) / (lo - fl));
}

}  // namespace

AlgebraicRoot::AlgebraicRoot(UniPoly defining, Interval isolator)
    : defining_(std::move(defining)), isolator_(std::move(isolator)) {
  if (defining_.eval(isolator_.hi) == 0) {
    rational_ = isolator_.hi;
    isolator_.lo = isolator_.hi;
    return;
  }
  if (sturm_count(defining_, isolator_.lo, isolator_.hi) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root");
  // Snap to a rational value when the root is one: after refining, the
  // smallest-denominator rational in the isolator is the only candidate.
  refine(std::max(isolator_.width(), Rational(1)) / (Integer(1) << 64));
  if (rational_) return;
  Rational cand = simplest_rational_in(isolator_.lo, isolator_.hi);
  if (cand > isolator_.lo && defining_.eval(cand) == 0) {
    rational_ = cand;
    isolator_ = {cand, cand};
  }
}

AlgebraicRoot AlgebraicRoot::from_rational(const Rational& v) {
  return AlgebraicRoot(UniPoly({-v, Rational(1)}), Interval{v - 1, v});
}

AlgebraicRoot AlgebraicRoot::sqrt_of(const Rational& v) {
  if (v < 0) throw std::invalid_argument("sqrt_of negative rational");
  if (auto s = sqrt_exact(v)) return from_rational(*s);
  return AlgebraicRoot(UniPoly({-v, Rational(0), Rational(1)}),
                       Interval{Rational(0), v < 1 ? Rational(1) : v});
}

std::optional<Rational> AlgebraicRoot::square_if_pure_sqrt() const {
  if (rational_) return *rational_ * *rational_;
  if (defining_.degree() == 2 && defining_[1] == 0 && defining_[2] == 1) return -defining_[0];
  return std::nullopt;
}

void AlgebraicRoot::refine(const Rational& w) {
  if (rational_) {
    isolator_ = {*rational_, *rational_};
    return;
  }
  // The tracked root is in (lo, hi], but lo itself may be a *different* root
  // of the defining polynomial; move it inward first so signs are usable.
  while (sgn(defining_.eval(isolator_.lo)) == 0) {
    Rational mid = isolator_.mid();
    if (sturm_count(defining_, mid, isolator_.hi) == 1)
      isolator_.lo = mid;
    else
      isolator_.hi = mid;
  }
  int slo = sgn(defining_.eval(isolator_.lo));
  while (isolator_.width() > w) {
    Rational mid = isolator_.mid();
    int sm = sgn(defining_.eval(mid));
    if (sm == 0) {
      rational_ = mid;
      isolator_ = {mid, mid};
      return;
    }
    if (sm == slo) {
      isolator_.lo = mid;
    } else {
      isolator_.hi = mid;
    }
  }
}

double AlgebraicRoot::approx() const {
  if (rational_) return to_double(*rational_);
  AlgebraicRoot copy = *this;
  copy.refine(Rational(Integer(1), Integer(1) << 40));
  return to_double(copy.isolator().mid());
}

int AlgebraicRoot::sign() const {
  if (rational_) return sgn(*rational_);
  AlgebraicRoot copy = *this;
  while (copy.isolator().lo < 0 && copy.isolator().hi > 0) {
    if (copy.defining_.eval(Rational(0)) == 0) return 0;  // root is exactly zero
    copy.refine(copy.isolator().width() / 4);
  }
  return copy.isolator().lo >= 0 ? 1 : -1;
}

std::vector<AlgebraicRoot> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of zero polynomial");
  std::vector<AlgebraicRoot> out;
  UniPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return out;
  Rational bound = cauchy_bound(sf);
  struct Item {
    Rational lo, hi;
    int count;
  };
  std::vector<Item> stack{{-bound, bound, sturm_count(sf, -bound, bound)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 0) continue;
    if (it.count == 1) {
      out.emplace_back(sf, Interval{it.lo, it.hi});
      continue;
    }
    Rational mid = (it.lo + it.hi) / 2;
    int left = sturm_count(sf, it.lo, mid);
    stack.push_back({it.lo, mid, left});
    stack.push_back({mid, it.hi, it.count - left});
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicRoot& a, const AlgebraicRoot& b) {
    return a.isolator().hi < b.isolator().hi;
  });
  // Make isolator interiors pairwise disjoint.
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].isolator().hi > out[i + 1].isolator().lo) {
      out[i].refine(out[i].isolator().width() / 4);
      out[i + 1].refine(out[i + 1].isolator().width() / 4);
    }
  }
  return out;
}

}  // namespace orbitkit
