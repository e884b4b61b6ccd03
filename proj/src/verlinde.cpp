#include "parab/verlinde.hpp"

#include <mpfr.h>

#include <string>

#include "parab/errors.hpp"

namespace parab {

Int verlinde_dim(long p, long g) {
  if (p < 2) throw invalid_params("verlinde level must be >= 2");
  if (g < 1) throw invalid_params("genus must be >= 1");
  if (g == 1) return Int(p - 1);

  for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 2) {
    mpfr_t pi, s, term, acc, half_p, resid;
    mpfr_inits2(prec, pi, s, term, acc, half_p, resid, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(acc, 1);
    for (long k = 1; k < p; ++k) {
      mpfr_mul_si(s, pi, k, MPFR_RNDN);
      mpfr_div_si(s, s, p, MPFR_RNDN);
      mpfr_sin(s, s, MPFR_RNDN);
      mpfr_pow_si(term, s, 2 - 2 * g, MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    mpfr_set_si(half_p, p, MPFR_RNDN);
    mpfr_div_si(half_p, half_p, 2, MPFR_RNDN);
    mpfr_pow_si(half_p, half_p, g - 1, MPFR_RNDN);
    mpfr_mul(acc, acc, half_p, MPFR_RNDN);

    Int out;
    mpfr_get_z(out.get_mpz_t(), acc, MPFR_RNDN);
    mpfr_sub_z(resid, acc, out.get_mpz_t(), MPFR_RNDN);
    mpfr_abs(resid, resid, MPFR_RNDN);
    bool good = mpfr_cmp_d(resid, 1e-6) < 0;
    mpfr_clears(pi, s, term, acc, half_p, resid, static_cast<mpfr_ptr>(nullptr));
    if (good) return out;
  }
  throw precision_exhausted("verlinde dimension did not stabilize for p=" +
                            std::to_string(p) + " g=" + std::to_string(g));
}

}  // namespace parab
