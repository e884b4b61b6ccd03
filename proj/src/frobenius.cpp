#include "parab/frobenius.hpp"

#include <string>

#include "parab/errors.hpp"

namespace parab {

namespace {

QuotientElem xmul(const QuotientRing& ring, const QuotientElem& e) {
  return ring.elem(e.rep().shifted(1));
}

// sum formula, reduced once at the end; iota_rep is the raw P_{p-2}
UniPoly omega_sum_rep(const TwoBridgeParams& tb, const std::vector<UniPoly>& basis,
                      const QuotientRing& ring) {
  UniPoly acc;
  for (long k = 0; k + 1 < tb.p; ++k) {
    UniPoly sq = basis[static_cast<size_t>(k)] * basis[static_cast<size_t>(k)];
    int sign = (k % 2 == 0) ? 1 : -1;
    sign *= tb.eps[static_cast<size_t>(k)];  // eps_{k+1}
    acc.add_scaled(sq, Rational(sign), 0);
  }
  return ring.reduce(std::move(acc));
}

// derivative identity route, one multiplication; equals the sum formula
UniPoly omega_product_rep(const UniPoly& riley_poly, const std::vector<UniPoly>& basis,
                          const QuotientRing& ring) {
  const UniPoly& last = basis.back();  // P_{p-2}
  return ring.reduce(-(last * riley_poly.derivative()));
}

constexpr long kOmegaSumCutoff = 255;

}  // namespace

ParabolicAlgebra build_algebra(long p, long q) { return build_algebra(make_params(p, q)); }

ParabolicAlgebra build_algebra(const TwoBridgeParams& tb) {
  std::vector<UniPoly> all = continuant_p_all(tb, tb.p - 1);
  UniPoly riley_poly = all.back();
  if (!is_squarefree(riley_poly))
    throw internal_inconsistency("defining polynomial is not squarefree at " +
                                 std::to_string(tb.p) + "/" + std::to_string(tb.q));
  ParabolicAlgebra v;
  v.tb = tb;
  v.ring = QuotientRing(std::move(riley_poly));
  all.pop_back();          // drop P_{p-1}
  all.erase(all.begin());  // drop P_{-1}
  v.basis = std::move(all);
  v.iota = v.ring.elem(v.basis.back());
  UniPoly omega_rep = (tb.p <= kOmegaSumCutoff)
                          ? omega_sum_rep(tb, v.basis, v.ring)
                          : omega_product_rep(v.ring.modulus(), v.basis, v.ring);
  v.omega = v.ring.elem(std::move(omega_rep));
  return v;
}

ParabolicAlgebra assemble_algebra(TwoBridgeParams tb, UniPoly riley_poly,
                                  UniPoly omega_rep) {
  if (riley_poly.degree() != static_cast<int>(tb.p - 1))
    throw invalid_params("cached defining polynomial has wrong degree");
  if (omega_rep.degree() >= riley_poly.degree())
    throw invalid_params("cached omega is not reduced");
  std::vector<UniPoly> all = continuant_p_all(tb, tb.p - 2);
  all.erase(all.begin());
  // the chain is rebuilt anyway, so one closing recurrence step revalidates the
  // supplied modulus at negligible cost; anything else in that slot is stale
  UniPoly closed = all.back().shifted(1) * Rational(eps_at(tb.p, tb.q, tb.p - 1)) +
                   all[static_cast<size_t>(tb.p - 3)];
  if (riley_poly != closed)
    throw internal_inconsistency("cached defining polynomial disagrees with the recurrence");
  ParabolicAlgebra v;
  v.tb = std::move(tb);
  v.ring = QuotientRing(std::move(riley_poly));
  v.basis = std::move(all);
  v.iota = v.ring.elem(v.basis.back());
  v.omega = v.ring.elem(std::move(omega_rep));
  return v;
}

QuotientElem ParabolicAlgebra::pb(long k) const {
  long p = tb.p;
  if (k >= -1 && k <= p - 2) {
    if (k == -1) return ring.zero();
    return ring.elem(basis[static_cast<size_t>(k)]);
  }
  if (k >= p - 1) {
    // march up from the top of the stored band
    QuotientElem prev = ring.elem(basis[static_cast<size_t>(p - 2)]);  // index p-2
    QuotientElem cur = ring.zero();                                    // index p-1
    for (long m = p; m <= k; ++m) {
      QuotientElem next = xmul(ring, cur) * Rational(eps_at(tb.p, tb.q, m)) + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // march down: P_{m} = P_{m+2} - eps_{m+2} x P_{m+1}
  QuotientElem above = ring.one();   // index 0
  QuotientElem cur = ring.zero();    // index -1
  for (long m = -2; m >= k; --m) {
    QuotientElem next = above - xmul(ring, cur) * Rational(eps_at(tb.p, tb.q, m + 2));
    above = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> ParabolicAlgebra::to_basis(const QuotientElem& e) const {
  long n = tb.p - 1;  // dim V
  std::vector<Rational> out(static_cast<size_t>(n));
  UniPoly rep = e.rep();
  for (long k = n - 1; k >= 0; --k) {
    const UniPoly& bk = basis[static_cast<size_t>(k)];
    Rational c = rep.coeff(static_cast<int>(k)) / bk.leading();  // leading is +-1
    if (c != 0) rep.add_scaled(bk, -c, 0);
    out[static_cast<size_t>(k)] = std::move(c);
  }
  if (!rep.is_zero()) throw internal_inconsistency("basis change left a remainder");
  return out;
}

Rational ParabolicAlgebra::counit(const QuotientElem& e) const {
  return to_basis(e)[0];
}

Rational ParabolicAlgebra::counit_trace_route(const QuotientElem& e) const {
  return quotient_trace(omega.invert() * e);
}

Rational ParabolicAlgebra::eta(const QuotientElem& a, const QuotientElem& b) const {
  return counit(a * b);
}

QuotientElem ParabolicAlgebra::omega_sum_route() const {
  return ring.elem(omega_sum_rep(tb, basis, ring));
}

QuotientElem ParabolicAlgebra::omega_product_route() const {
  return ring.elem(omega_product_rep(ring.modulus(), basis, ring));
}

Int ParabolicAlgebra::signature(long g) const {
  if (g < 1) throw invalid_params("genus must be >= 1");
  return to_integer(quotient_trace(omega.pow(g - 1)));
}

Rational ParabolicAlgebra::colored_signature(long g, const std::vector<long>& colors) const {
  if (g < 0) throw invalid_params("genus must be >= 0");
  QuotientElem prod = ring.one();
  for (long c : colors) {
    if (c < 0 || c > tb.p - 2) throw invalid_params("color out of range");
    prod = prod * ring.elem(basis[static_cast<size_t>(c)]);
  }
  if (g == 0) return counit(prod);
  return quotient_trace(omega.pow(g - 1) * prod);
}

}  // namespace parab
