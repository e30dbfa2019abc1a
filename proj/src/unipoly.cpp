// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace orbitkit {

namespace {
const Rational kZero(0);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(Rational c, int k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = std::move(c);
  return UniPoly(std::move(v));
}

const Rational& UniPoly::operator[](size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(i) * c_[i];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * inner + UniPoly::constant(*it);
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly acc = UniPoly::constant(Rational(1));
  UniPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> r(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  UniPoly r = *this;
  int dq = degree() - divisor.degree();
  if (dq < 0) return {UniPoly(), r};
  std::vector<Rational> q(dq + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    int shift = r.degree() - divisor.degree();
    Rational coef = r.leading() / divisor.leading();
    q[shift] = coef;
    r = r - UniPoly::monomial(coef, shift) * divisor;
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw NonzeroRemainder("polynomial division left a nonzero remainder");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return (Rational(1) / x.leading()) * x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  UniPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return p.divide_exact(g);
}

int descartes_changes(const UniPoly& p) {
  int changes = 0, prev = 0;
  for (const auto& c : p.coeffs()) {
    int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  UniPoly sf = squarefree_part(p);
  chain.push_back(sf);
  if (sf.degree() >= 1) {
    chain.push_back(sf.derivative());
    while (chain.back().degree() >= 1) {
      UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
      if (r.is_zero()) break;
      chain.push_back(-r);
    }
  }
  return chain;
}

int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Sign variations as x -> +inf (dir=+1) or -inf (dir=-1).
int variations_at_infinity(const std::vector<UniPoly>& chain, int dir) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = sgn(q.leading());
    if (dir < 0 && (q.degree() % 2 == 1)) s = -s;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
  if (p.degree() == 0 || lo >= hi) return 0;
  auto chain = sturm_chain(p);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

std::optional<UniPoly> perfect_square_decompose(const UniPoly& p) {
  if (p.is_zero()) return UniPoly();
  int n = p.degree();
  if (n % 2 != 0) return std::nullopt;
  int m = n / 2;
  auto lead = sqrt_exact(p.leading());
  if (!lead) return std::nullopt;
  std::vector<Rational> b(m + 1, Rational(0));
  b[m] = *lead;
  // Match coefficients of x^(m+j) downward; each determines b[j] linearly.
  for (int j = m - 1; j >= 0; --j) {
    Rational acc(0);
    for (int i = j + 1; i <= m; ++i) {
      int k = m + j - i;
      if (k <= j || k > m) continue;
      acc += b[i] * b[k];
    }
    b[j] = (p[m + j] - acc) / (Rational(2) * b[m]);
  }
  UniPoly q(std::move(b));
  if (q * q == p) return q;
  return std::nullopt;
}

Rational cauchy_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational maxr(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p[i] / p.leading());
    if (r > maxr) maxr = r;
  }
  return maxr + 1;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (a != 1 || i == 0) os << a.str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace orbitkit
