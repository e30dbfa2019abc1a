// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/rational.hpp"

#include <cctype>

namespace orbitkit {

Rational parse_rational(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  auto slash = s.find('/');
  try {
    if (slash != std::string_view::npos) {
      Integer num(std::string(s.substr(0, slash)));
      Integer den(std::string(s.substr(slash + 1)));
      if (den == 0) throw ParseError("zero denominator");
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(Integer(std::string(s)));
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal");
    bool neg = !digits.empty() && digits[0] == '-';
    Integer whole = digits.empty() || digits == "-" || digits == "+" ? Integer(0)
                                                                     : Integer(digits);
    Integer den(1);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer num = abs(whole) * den + (frac.empty() ? Integer(0) : Integer(frac));
    if (neg || whole < 0) num = -num;
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw ParseError(std::string("cannot parse rational '") + std::string(s) + "': " + e.what());
  }
}

std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer n = numerator(r), d = denominator(r);
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

std::string to_string(const Rational& r) { return r.str(); }

Rational rat_pow(Rational r, unsigned e) {
  Rational out(1);
  while (e) {
    if (e & 1u) out *= r;
    r *= r;
    e >>= 1;
  }
  return out;
}

}  // namespace orbitkit
