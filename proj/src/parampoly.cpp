// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/parampoly.hpp"

#include <algorithm>
#include <sstream>

namespace orbitkit {

namespace {
const UniPoly kZeroPoly;
}

void ParamPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ParamPoly ParamPoly::from_coeff_in_t(UniPoly in_t, int xpow) {
  std::vector<UniPoly> v(xpow + 1);
  v[xpow] = std::move(in_t);
  return ParamPoly(std::move(v));
}

const UniPoly& ParamPoly::coeff(size_t j) const {
  return j < c_.size() ? c_[j] : kZeroPoly;
}

UniPoly ParamPoly::eval_t(const Rational& t) const {
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval(t);
  return UniPoly(std::move(r));
}

Rational ParamPoly::eval(const Rational& t, const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->eval(t);
  return acc;
}

ParamPoly ParamPoly::derivative_x() const {
  if (c_.size() <= 1) return ParamPoly();
  std::vector<UniPoly> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(i) * c_[i];
  return ParamPoly(std::move(d));
}

ParamPoly ParamPoly::compose_x(const ParamPoly& inner) const {
  ParamPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + ParamPoly({*it});
  return acc;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  std::vector<UniPoly> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
  return ParamPoly(std::move(r));
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
  std::vector<UniPoly> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
  return ParamPoly(std::move(r));
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly();
  std::vector<UniPoly> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
  return ParamPoly(std::move(r));
}

ParamPoly operator*(const UniPoly& s, const ParamPoly& p) {
  std::vector<UniPoly> r(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
  return ParamPoly(std::move(r));
}

ParamPoly operator*(const Rational& s, const ParamPoly& p) {
  std::vector<UniPoly> r(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
  return ParamPoly(std::move(r));
}

ParamPoly ParamPoly::operator-() const { return Rational(-1) * *this; }

ParamPoly ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  ParamPoly r = *this;
  int dq = degree_x() - divisor.degree_x();
  if (dq < 0) {
    if (is_zero()) return ParamPoly();
    throw NonzeroRemainder("dividend degree below divisor degree");
  }
  std::vector<UniPoly> q(dq + 1);
  while (!r.is_zero() && r.degree_x() >= divisor.degree_x()) {
    int shift = r.degree_x() - divisor.degree_x();
    UniPoly qc = r.leading().divide_exact(divisor.leading());
    q[shift] = qc;
    r = r - ParamPoly::from_coeff_in_t(qc, shift) * divisor;
  }
  if (!r.is_zero()) throw NonzeroRemainder("parameterized division left a nonzero remainder");
  return ParamPoly(std::move(q));
}

std::pair<ParamPoly, ParamPoly> ParamPoly::pseudo_divmod(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("pseudo-division by zero polynomial");
  ParamPoly q, r = *this;
  int e = degree_x() - divisor.degree_x() + 1;
  if (e <= 0) return {ParamPoly(), r};
  const UniPoly& d = divisor.leading();
  while (!r.is_zero() && r.degree_x() >= divisor.degree_x()) {
    ParamPoly s = ParamPoly::from_coeff_in_t(r.leading(), r.degree_x() - divisor.degree_x());
    q = d * q + s;
    r = d * r - s * divisor;
    --e;
  }
  UniPoly scale = UniPoly::constant(Rational(1));
  for (int i = 0; i < e; ++i) scale = scale * d;
  return {scale * q, scale * r};
}

std::string ParamPoly::str(const std::string& tvar, const std::string& xvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree_x(); j >= 0; --j) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[j].str(tvar) << ")";
    if (j > 0) os << "*" << xvar;
    if (j > 1) os << "^" << j;
    first = false;
  }
  return os.str();
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  int m = p.degree(), n = q.degree();
  if (m == 0 && n == 0) return Rational(1);
  if (n == 0) return rat_pow(q.leading(), m);
  if (m == 0) return rat_pow(p.leading(), n);
  Rational sign = (m % 2 == 1 && n % 2 == 1) ? Rational(-1) : Rational(1);
  if (m < n) return sign * resultant(q, p);
  UniPoly r = p.divmod(q).second;
  if (r.is_zero()) return Rational(0);
  return sign * rat_pow(q.leading(), m - r.degree()) * resultant(q, r);
}

}  // namespace orbitkit
