// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_PARAMPOLY_HPP
#define ORBITKIT_PARAMPOLY_HPP

#include <vector>

#include "orbitkit/unipoly.hpp"

namespace orbitkit {

/// Polynomial in x whose coefficients are polynomials in a parameter t.
/// Stored dense in x (ascending); coefficient of x^j is a UniPoly in t.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ParamPoly x() { return ParamPoly({UniPoly(), UniPoly::constant(Rational(1))}); }
  static ParamPoly t() { return ParamPoly({UniPoly::x()}); }
  static ParamPoly constant(Rational v) { return ParamPoly({UniPoly::constant(std::move(v))}); }
  static ParamPoly from_coeff_in_t(UniPoly in_t, int xpow);

  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<UniPoly>& coeffs() const { return c_; }
  const UniPoly& coeff(size_t j) const;
  const UniPoly& leading() const { return c_.back(); }

  // Specialize the parameter; result is a UniPoly in x.
  UniPoly eval_t(const Rational& t) const;
  Rational eval(const Rational& t, const Rational& x) const;

  ParamPoly derivative_x() const;
  // Substitute `inner` for x (coefficients in t pass through).
  ParamPoly compose_x(const ParamPoly& inner) const;

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const UniPoly& s, const ParamPoly& p);
  friend ParamPoly operator*(const Rational& s, const ParamPoly& p);
  ParamPoly operator-() const;
  bool operator==(const ParamPoly& o) const { return c_ == o.c_; }

  // Division in Q[t][x]; every quotient coefficient must divide exactly in
  // Q[t] and the remainder must vanish, else NonzeroRemainder.
  ParamPoly divide_exact(const ParamPoly& divisor) const;

  // lc(divisor)^(deg a - deg b + 1) * this = q * divisor + r.
  std::pair<ParamPoly, ParamPoly> pseudo_divmod(const ParamPoly& divisor) const;

  std::string str(const std::string& tvar = "t", const std::string& xvar = "x") const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

/// Signed subresultant chain of p, q with respect to x (Ducos' algorithm).
/// chain[j] is the j-th subresultant S_j for 0 <= j <= deg_x(q); entries above
/// the chain's reach are left empty. resultant() == S_0 as a polynomial in t.
struct SubresultantChain {
  std::vector<ParamPoly> chain;
  UniPoly resultant;  // zero polynomial when p, q share a factor over Q(t)
  // Principal subresultant coefficient s_j = coeff of x^j in S_j (zero poly if S_j = 0).
  UniPoly principal(size_t j) const;
};

SubresultantChain subresultants_x(const ParamPoly& p, const ParamPoly& q);
UniPoly resultant_x(const ParamPoly& p, const ParamPoly& q);

// Resultant of univariate rational polynomials (Sylvester convention).
Rational resultant(const UniPoly& p, const UniPoly& q);

}  // namespace orbitkit

#endif
