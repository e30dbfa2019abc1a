// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_UNIPOLY_HPP
#define ORBITKIT_UNIPOLY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

struct NonzeroRemainder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over Q, coefficients in ascending degree order.
/// The zero polynomial is the empty coefficient vector (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(Rational v) { return UniPoly(std::vector<Rational>{std::move(v)}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  // c * x^k
  static UniPoly monomial(Rational c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of x^k, zero beyond the degree.
  const Rational& operator[](size_t k) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  UniPoly derivative() const;
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned e) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // Field division: dividend = q * divisor + r with deg r < deg divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  // Throws NonzeroRemainder unless the division is exact.
  UniPoly divide_exact(const UniPoly& divisor) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, or zero if both zero
UniPoly squarefree_part(const UniPoly& p);

int descartes_changes(const UniPoly& p);

// Distinct real roots on the whole line / in the half-open interval (lo, hi].
int sturm_count(const UniPoly& p);
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

// q with q^2 = p and positive leading coefficient, when p is a square in Q[x].
std::optional<UniPoly> perfect_square_decompose(const UniPoly& p);

// All roots have |x| < cauchy_bound(p).
Rational cauchy_bound(const UniPoly& p);

}  // namespace orbitkit

#endif
