#pragma once

#include "parab/quotient.hpp"
#include "parab/twobridge.hpp"

namespace parab {

// V = Q[x]/(P_{p-1}) with the continuant basis P_0..P_{p-2} and the Frobenius
// structure induced by the counit picking the P_0 coordinate
struct ParabolicAlgebra {
  TwoBridgeParams tb;
  QuotientRing ring;
  std::vector<UniPoly> basis;  // raw P_k, degree k, k = 0..p-2
  QuotientElem iota;           // P_{p-2}; squares to -1
  QuotientElem omega;          // sum_k (-1)^k eps_{k+1} P_k^2

  QuotientElem elem(UniPoly rep) const { return ring.elem(std::move(rep)); }
  QuotientElem x() const { return ring.x(); }

  // basis element with extended index: any integer k, recursion run inside V
  QuotientElem pb(long k) const;

  // coordinates in the continuant basis (triangular back substitution)
  std::vector<Rational> to_basis(const QuotientElem& e) const;
  // counit: coefficient of P_0
  Rational counit(const QuotientElem& e) const;
  // same functional through the trace form, for cross-checking
  Rational counit_trace_route(const QuotientElem& e) const;
  // bilinear form eta(a, b) = counit(a * b)
  Rational eta(const QuotientElem& a, const QuotientElem& b) const;

  // the defining sum formula for omega, regardless of how `omega` was built
  QuotientElem omega_sum_route() const;
  // the closed form -P_{p-2} * P'_{p-1}, likewise route-independent
  QuotientElem omega_product_route() const;

  // sigma_g = Tr(omega^{g-1}), g >= 1; always an integer
  Int signature(long g) const;
  // counit(omega^g * prod P_{colors[i]}), g >= 0, colors in [0, p-2]
  Rational colored_signature(long g, const std::vector<long>& colors) const;
};

ParabolicAlgebra build_algebra(long p, long q);
ParabolicAlgebra build_algebra(const TwoBridgeParams& tb);

// assemble from precomputed parts (cache path); degrees are validated, values trusted
ParabolicAlgebra assemble_algebra(TwoBridgeParams tb, UniPoly riley_poly, UniPoly omega_rep);

}  // namespace parab
