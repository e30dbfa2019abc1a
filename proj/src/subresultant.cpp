// SPDX-License-Identifier: Apache-2.0
#include "orbitkit/parampoly.hpp"

namespace orbitkit {

namespace {

UniPoly upow(const UniPoly& b, unsigned e) { return b.pow(e); }

// Pseudo-remainder of A by -B: (-1)^(deg A - deg B + 1) * prem(A, B).
ParamPoly prem_neg(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r = a.pseudo_divmod(b).second;
  int delta = a.degree_x() - b.degree_x();
  if ((delta + 1) % 2 == 1) r = -r;
  return r;
}

ParamPoly divide_coeffs_exact(const ParamPoly& p, const UniPoly& d) {
  std::vector<UniPoly> out(p.coeffs().size());
  for (size_t i = 0; i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i].divide_exact(d);
  return ParamPoly(std::move(out));
}

}  // namespace

UniPoly SubresultantChain::principal(size_t j) const {
  if (j >= chain.size() || chain[j].is_zero()) return UniPoly();
  return chain[j].coeff(j);
}

// Ducos' subresultant PRS. Requires deg_x(p) > deg_x(q) >= 0; produces the
// signed subresultants S_j for j below deg_x(q).
SubresultantChain subresultants_x(const ParamPoly& p, const ParamPoly& q) {
  int dp = p.degree_x(), dq = q.degree_x();
  if (p.is_zero() || q.is_zero() || dp <= dq)
    throw std::invalid_argument("subresultants_x requires deg p > deg q >= 0");
  SubresultantChain out;
  out.chain.assign(dp, ParamPoly());
  if (dq < dp - 1 && dq >= 0) {
    // S_dq = lc(q)^(dp-dq-1) * q; intermediate indices are zero.
    out.chain[dq] = upow(q.leading(), dp - dq - 1) * q;
  } else if (dq == dp - 1) {
    out.chain[dq] = q;
  }
  UniPoly s = upow(q.leading(), dp - dq);
  ParamPoly A = q;
  ParamPoly B = prem_neg(p, q);
  while (true) {
    if (B.is_zero()) break;
    int dA = A.degree_x(), dB = B.degree_x();
    if (dA - 1 < static_cast<int>(out.chain.size())) out.chain[dA - 1] = B;
    int delta = dA - dB;
    ParamPoly C;
    if (delta > 1) {
      C = divide_coeffs_exact(upow(B.leading(), delta - 1) * B, upow(s, delta - 1));
      out.chain[dB] = C;
    } else {
      C = B;
    }
    if (dB == 0) break;
    B = divide_coeffs_exact(prem_neg(A, B), s.pow(delta) * A.leading());
    A = C;
    s = A.leading();
  }
  if (!out.chain.empty() && !out.chain[0].is_zero() && out.chain[0].degree_x() == 0)
    out.resultant = out.chain[0].coeff(0);
  else
    out.resultant = UniPoly();
  return out;
}

UniPoly resultant_x(const ParamPoly& p, const ParamPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly();
  int m = p.degree_x(), n = q.degree_x();
  if (n == 0) return q.coeff(0).pow(m);
  if (m == 0) return p.coeff(0).pow(n);
  bool flip_sign = (m % 2 == 1 && n % 2 == 1);
  if (m < n) {
    UniPoly r = resultant_x(q, p);
    return flip_sign ? -r : r;
  }
  if (m == n) {
    // res(p,q) = (-1)^(mn) res(q, prem(p,q)) / lc(q)^deg(prem)
    ParamPoly r = p.pseudo_divmod(q).second;
    if (r.is_zero()) return UniPoly();
    UniPoly res = resultant_x(q, r).divide_exact(q.leading().pow(r.degree_x()));
    return flip_sign ? -res : res;
  }
  return subresultants_x(p, q).resultant;
}

}  // namespace orbitkit
