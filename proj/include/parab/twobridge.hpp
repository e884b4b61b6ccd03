#pragma once

#include <vector>

#include "parab/unipoly.hpp"

namespace parab {

// normalized fraction q/p of a two-bridge knot: p odd >= 3, q odd, 0 < q < p, coprime
struct TwoBridgeParams {
  long p = 0, q = 0;
  std::vector<int> eps;  // eps[k-1] is the k-th sign, k = 1..p-1; palindromic
  long ell = 0;          // odd, 0 < ell < p, q*ell = +-1 mod p
  long ell_prime = 0;    // odd, 0 < ell_prime < 2p, q*ell_prime = -1 mod 2p
};

TwoBridgeParams make_params(long p, long q);

// sign (-1)^floor(k q / p) for any integer k
int eps_at(long p, long q, long k);

// continuant polynomials over the sign sequence:
// P_-1 = 0, P_0 = 1, P_m = eps_m x P_{m-1} + P_{m-2}; Q_-1 = 1, Q_0 = 0
UniPoly continuant_p(const TwoBridgeParams& tb, long m);
UniPoly continuant_q(const TwoBridgeParams& tb, long m);
// all of P_-1 .. P_upto as a vector indexed by m+1
std::vector<UniPoly> continuant_p_all(const TwoBridgeParams& tb, long upto);

// the knot group's defining polynomial P_{p-1}; squarefree is asserted
UniPoly riley(const TwoBridgeParams& tb);

}  // namespace parab
