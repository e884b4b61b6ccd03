#include "parab/torsion.hpp"

#include "parab/errors.hpp"

namespace parab {

namespace {

QuotientElem x_sq(const ParabolicAlgebra& v) { return v.x() * v.x(); }

Rational eps_r(const ParabolicAlgebra& v, long k) {
  return Rational(eps_at(v.tb.p, v.tb.q, k));
}

}  // namespace

TorsionPair tau1(const ParabolicAlgebra& v) {
  long p = v.tb.p;
  QuotientElem qelem = v.elem(continuant_q(v.tb, p - 2));
  QuotientElem sum = v.ring.zero();
  for (long k = 1; 2 * k <= p - 1; ++k)
    sum = sum + (v.pb(2 * k - 1) + v.pb(2 * k - 3)) * eps_r(v, 2 * k - 1);
  QuotientElem raw = (qelem - v.x() * sum) * x_sq(v).invert();
  QuotientElem simple = (x_sq(v) * v.pb(v.tb.ell - 1)).invert() * Rational(2);
  return {raw, simple};
}

TorsionPair tau2(const ParabolicAlgebra& v) {
  long p = v.tb.p;
  QuotientElem sum = v.ring.zero();
  for (long k = 1; 2 * k <= p - 1; ++k) {
    QuotientElem t = v.pb(2 * k - 1);
    sum = sum + t * t * eps_r(v, 2 * k);
  }
  QuotientElem pl = v.pb(v.tb.ell - 1);
  QuotientElem denom = x_sq(v) * pl * pl;
  // the half-sum equals -Omega/2, so the raw route takes the negated sum
  QuotientElem raw = (-sum) * (denom * Rational(2)).invert();
  QuotientElem simple = v.omega * (denom * Rational(4)).invert();
  return {raw, simple};
}

QuotientElem tau1_delta(const ParabolicAlgebra& v) {
  long p = v.tb.p;
  QuotientElem d11 = v.pb(p - 2);
  QuotientElem d13_sum = v.ring.zero();
  QuotientElem d14_sum = v.ring.zero();
  for (long k = 1; 2 * k <= p - 1; ++k) {
    long e_odd = eps_at(v.tb.p, v.tb.q, 2 * k - 1);
    long e_even = eps_at(v.tb.p, v.tb.q, 2 * k);
    d13_sum = d13_sum + v.pb(2 * k - 2 - e_odd) * Rational(e_odd);
    d14_sum = d14_sum + v.pb(2 * k - 1 - e_even) * Rational(e_even);
  }
  QuotientElem d13 = v.elem(continuant_q(v.tb, p - 2)) - v.x() * d13_sum;
  QuotientElem d14 = -(v.x() * d14_sum);
  // determinant with d12 = -1: d11 d14 - d12 d13
  return d11 * d14 + d13;
}

Rational inverse_sum_tau1(const ParabolicAlgebra& v) {
  return quotient_trace(tau1(v).simple.invert()) / 2;
}

Rational inverse_sum_tau2(const ParabolicAlgebra& v) {
  if (v.tb.q == 1)
    throw invalid_params("inverse sum for the adjoint torsion needs q > 1");
  return quotient_trace(tau2(v).simple.invert()) / 2;
}

Rational expected_inverse_sum_tau1(const TwoBridgeParams& tb) {
  if (tb.q == 1) return Rational(2 - tb.p) / 2;
  return Rational(eps_at(tb.p, tb.q, (tb.ell_prime - 1) / 2));
}

QuotientElem cusp_shape(const ParabolicAlgebra& v) {
  long wr = 0;
  for (int e : v.tb.eps) wr += e;
  QuotientElem qelem = v.elem(continuant_q(v.tb, v.tb.p - 2));
  return v.iota * qelem * v.x().invert() * Rational(2) -
         v.ring.constant(Rational(2 * wr));
}

ReciprocityReport reciprocity_check(const ParabolicAlgebra& v) {
  ReciprocityReport rep;
  rep.partner_ell = v.tb.ell;
  ParabolicAlgebra w = build_algebra(v.tb.p, v.tb.ell);
  QuotientElem y = v.x() * v.pb(v.tb.ell - 1);  // image of the partner variable

  rep.riley_vanishes = compose(w.ring.modulus(), y).is_zero();
  // partner-side inverse substitution: x = y * P*_{q-1}(y)
  rep.maps_inverse = (y * compose(continuant_p(w.tb, v.tb.q - 1), y)) == v.x();
  rep.q_transform = compose(continuant_q(w.tb, w.tb.p - 2), y) ==
                    v.elem(continuant_q(v.tb, v.tb.p - 2)) * v.pb(v.tb.ell - 1);
  QuotientElem pl = v.pb(v.tb.ell - 1);
  QuotientElem transported = compose(w.omega.rep(), y) * pl * pl;
  if (transported == v.omega)
    rep.omega_sign = 1;
  else if (transported == -v.omega)
    rep.omega_sign = -1;
  rep.expected_omega_sign = (v.tb.q * v.tb.ell) % v.tb.p == 1 ? 1 : -1;
  rep.omega_transform =
      rep.omega_sign != 0 && rep.omega_sign == rep.expected_omega_sign;
  return rep;
}

}  // namespace parab
