// SPDX-License-Identifier: Apache-2.0
#ifndef ORBITKIT_RATIONAL_HPP
#define ORBITKIT_RATIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace orbitkit {

using Integer = boost::multiprecision::mpz_int;
// Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p/q", integer strings, and decimal strings ("2.658" -> 2658/1000).
Rational parse_rational(std::string_view s);

// Exact square root when the argument is a square in Q, otherwise empty.
std::optional<Rational> sqrt_exact(const Rational& r);

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline int sgn(const Rational& r) { return r.sign(); }

std::string to_string(const Rational& r);

// r^e by repeated squaring (non-negative exponent).
Rational rat_pow(Rational r, unsigned e);

}  // namespace orbitkit

#endif
