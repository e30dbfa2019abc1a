// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/map_family.hpp"

#include <sstream>

namespace orbitkit {

Rational MapFamily::iterate(const Rational& t, Rational x, int iterates) const {
  for (int i = 0; i < iterates; ++i) x = rule.eval(t, x);
  return x;
}

double MapFamily::iterate(double t, double x, int iterates) const {
  // Specialize coefficients once; Horner per step.
  std::vector<double> c(rule.coeffs().size());
  for (size_t j = 0; j < c.size(); ++j) c[j] = rule.coeffs()[j].eval(t);
  for (int i = 0; i < iterates; ++i) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    x = acc;
  }
  return x;
}

MapFamily builtin(const std::string& name, const std::vector<Rational>& fixed_params) {
  const Rational one(1), zero(0);
  if (name == "quadratic-normal") {
    // f_t(x) = 1 - t x^2
    ParamPoly rule({UniPoly::constant(one), UniPoly(), -UniPoly::x()});
    return {name, rule, "alpha", UniPoly::x(), std::nullopt};
  }
  if (name == "S-fixed-a" || name == "T-fixed-a") {
    if (fixed_params.empty())
      throw MissingFixedParam(name + " requires the fixed parameter a");
    const Rational& a = fixed_params[0];
    if (name == "S-fixed-a") {
      // S_{a,c}(x) = a - c x^2, parameter c; conjugate to f_{a c}
      ParamPoly rule({UniPoly::constant(a), UniPoly(), -UniPoly::x()});
      return {name, rule, "c", UniPoly({zero, a}), a};
    }
    // T_{a,c}(x) = a - c(1 + x^2), parameter c; conjugate to f_{(a-c)c}
    ParamPoly rule({UniPoly({a, Rational(-1)}), UniPoly(), -UniPoly::x()});
    return {name, rule, "c", UniPoly({zero, a, Rational(-1)}), a};
  }
  if (name == "logistic") {
    // F_mu(x) = mu x (1 - x); conjugate to f_{(mu^2-2mu)/4}
    ParamPoly rule({UniPoly(), UniPoly::x(), -UniPoly::x()});
    return {name, rule, "mu", UniPoly({zero, Rational(-1, 2), Rational(1, 4)}), std::nullopt};
  }
  if (name == "cubic-exercise") {
    // g_c(x) = x^3 - 2x + c, parameter c
    ParamPoly rule({UniPoly::x(), UniPoly::constant(Rational(-2)), UniPoly(),
                    UniPoly::constant(one)});
    return {name, rule, "c", std::nullopt, std::nullopt};
  }
  throw UnknownFamily("unknown family: " + name);
}

bool verify_conjugacy(const Conjugacy& c) {
  if (c.scale == 0) throw DegenerateConjugacy("conjugacy scale is zero");
  UniPoly h({c.offset, c.scale});
  return c.source.compose(h) == h.compose(c.target);
}

Rational effective_alpha(const MapFamily& f, const Rational& t) {
  if (!f.normal_form_reduction)
    throw std::invalid_argument(f.name + " has no normal-form reduction");
  return f.normal_form_reduction->eval(t);
}

MapFamily parse_family_spec(const std::string& spec) {
  std::string name;
  std::vector<Rational> fixed;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("bad family spec fragment: " + part);
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "family")
      name = val;
    else if (key == "a")
      fixed.push_back(parse_rational(val));
    else
      throw ParseError("unknown family spec key: " + key);
  }
  if (name.empty()) throw ParseError("family spec missing 'family='");
  return builtin(name, fixed);
}

}  // namespace orbitkit
