#include "parab/twobridge.hpp"

#include <numeric>
#include <string>

#include "parab/errors.hpp"

namespace parab {

int eps_at(long p, long q, long k) {
  long f = floordiv(k * q, p);
  return (f % 2 == 0) ? 1 : -1;
}

TwoBridgeParams make_params(long p, long q) {
  if (p < 3 || p % 2 == 0) throw invalid_params("p must be odd and >= 3");
  if (q < 1 || q >= p || q % 2 == 0) throw invalid_params("q must be odd with 0 < q < p");
  if (std::gcd(p, q) != 1) throw invalid_params("p and q must be coprime");
  TwoBridgeParams tb;
  tb.p = p;
  tb.q = q;
  tb.eps.resize(static_cast<size_t>(p - 1));
  for (long k = 1; k < p; ++k) tb.eps[static_cast<size_t>(k - 1)] = eps_at(p, q, k);
  for (long k = 1; k < p; ++k)
    if (tb.eps[static_cast<size_t>(k - 1)] != tb.eps[static_cast<size_t>(p - k - 1)])
      throw internal_inconsistency("sign sequence not palindromic");

  for (long l = 1; l < p; l += 2) {
    long r = (q * l) % p;
    if (r == 1 || r == p - 1) {
      if (tb.ell) throw internal_inconsistency("multiple values of ell");
      tb.ell = l;
    }
  }
  for (long l = 1; l < 2 * p; l += 2) {
    if ((q * l) % (2 * p) == 2 * p - 1) {
      if (tb.ell_prime) throw internal_inconsistency("multiple values of ell_prime");
      tb.ell_prime = l;
    }
  }
  if (!tb.ell || !tb.ell_prime)
    throw internal_inconsistency("ell or ell_prime not found for " + std::to_string(p) +
                                 "/" + std::to_string(q));
  return tb;
}

namespace {
std::vector<UniPoly> continuants(const TwoBridgeParams& tb, long upto, bool p_kind) {
  // index m+1 holds the m-th polynomial, m from -1
  std::vector<UniPoly> out;
  out.reserve(static_cast<size_t>(upto) + 2);
  out.push_back(p_kind ? UniPoly() : UniPoly({1}));
  out.push_back(p_kind ? UniPoly({1}) : UniPoly());
  for (long m = 1; m <= upto; ++m) {
    const UniPoly& prev = out[static_cast<size_t>(m)];
    const UniPoly& prev2 = out[static_cast<size_t>(m - 1)];
    UniPoly next = prev.shifted(1);
    if (tb.eps[static_cast<size_t>(m - 1)] < 0) next = -next;
    out.push_back(next + prev2);
  }
  out.resize(static_cast<size_t>(upto) + 2);  // upto = -1 keeps only the seed
  return out;
}
}  // namespace

UniPoly continuant_p(const TwoBridgeParams& tb, long m) {
  if (m < -1 || m >= tb.p) throw invalid_params("continuant index out of range");
  return continuants(tb, m, true).back();
}

UniPoly continuant_q(const TwoBridgeParams& tb, long m) {
  if (m < -1 || m >= tb.p) throw invalid_params("continuant index out of range");
  return continuants(tb, m, false).back();
}

std::vector<UniPoly> continuant_p_all(const TwoBridgeParams& tb, long upto) {
  if (upto < -1 || upto >= tb.p) throw invalid_params("continuant index out of range");
  return continuants(tb, upto, true);
}

UniPoly riley(const TwoBridgeParams& tb) {
  UniPoly r = continuant_p(tb, tb.p - 1);
  if (!is_squarefree(r))
    throw internal_inconsistency("defining polynomial is not squarefree at " +
                                 std::to_string(tb.p) + "/" + std::to_string(tb.q));
  return r;
}

}  // namespace parab
