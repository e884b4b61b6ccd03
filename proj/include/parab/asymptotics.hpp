#pragma once

#include <vector>

#include "parab/frobenius.hpp"
#include "parab/gaussian.hpp"
#include "parab/laurent.hpp"
#include "parab/quotient.hpp"

namespace parab {

// (a b; c d) with det 1, a and d odd, b and c even, 0 <= b < d, c > 0;
// drives the family p_n = c + d n, q_n = a + b n over odd n
struct MatrixParams {
  long a = 0, b = 0, c = 0, d = 0;
  long pn(long n) const { return c + d * n; }
  long qn(long n) const { return a + b * n; }
};

MatrixParams make_matrix_params(long a, long b, long c, long d);

// jump counts of r -> floor(r c / d), length d, last entry lowered by one; sums to c-1
std::vector<long> alpha_sequence(const MatrixParams& m);

struct HTriple {
  UniPoly h1, h2, h3;  // deg d, deg d, deg b (h3 = 1 when b = 0)
};

// block-matrix recipe with alternating conjugation; the first slot is read as
// +i*h1 (the sign that matches the exponential expansion of the bivariate triple
// and makes the limit form's trace table come out right)
HTriple h_polynomials(const MatrixParams& m);

struct ConditionH {
  bool h1_squarefree = false;
  bool h1_h3_coprime = false;
  bool ok() const { return h1_squarefree && h1_h3_coprime; }
};

ConditionH condition_h(const HTriple& h);

// W = Q[x]/(h1) with the limit form omega_w = -h1' h2 / h3^2
struct LimitAlgebra {
  MatrixParams m;
  HTriple h;
  QuotientRing ring;
  QuotientElem omega_w;
};

LimitAlgebra build_limit_algebra(const MatrixParams& m);

// Tr(omega_w^{g-1}) over Q, g >= 1
Rational limit_trace(const LimitAlgebra& w, long g);

// Laurent triple tied to the continuant family by the substitution identities
//   P_{p_n-1}(i(t+1/t)) (t-1/t)^d = i^{n+1} Q(t, t^n)
//   P_{p_n-2}(i(t+1/t)) (t-1/t)^d = i^n    R(t, t^n)
//   P_{q_n-1}(i(t+1/t)) (t-1/t)^b =        S(t, t^n)
// construction validates the identities exactly at n in {3,5,7}, trying the
// finite sign set on Q and R if the first attempt fails
struct BivariateTriple {
  LaurentBiPoly q, r, s;
  int sign_q = 1, sign_r = 1;  // unit bookkeeping; the construction pins both to +1
};

BivariateTriple bivariate_polys(const MatrixParams& m);
bool check_specialization(const MatrixParams& m, const BivariateTriple& t, long n);

struct QlemmaReport {
  bool symmetries = false;    // Q(-U,V) = Q(U,V) = -Q(U,-V) = -Q(1/U,1/V)
  bool extreme_v = false;     // V^{+-d} rows are +-(U+1/U)^{d-1} U^{+-c}
  bool newton = false;        // support hull is the +-(d-1,0)+-(c,d) parallelogram
  bool u_pm_one = false;      // Q(+-1, V) = +-2^{d-1} (V-1/V)^d
  bool expansion_h1 = false;  // Q(e^u,e^v) = 2^d u^d h1(v/u) + lower order zero
  bool expansion_h2 = false;  // same for R against h2
  bool expansion_h3 = false;  // S against h3 at order b
  bool all() const {
    return symmetries && extreme_v && newton && u_pm_one && expansion_h1 &&
           expansion_h2 && expansion_h3;
  }
};

QlemmaReport qlemma_report(const MatrixParams& m);

// genus-g signature of the n-th family member, direct quotient-algebra route
Int signature_direct(const MatrixParams& m, long g, long n);
// same number through the reciprocal pair (p_n, d)
Int signature_reciprocal(const MatrixParams& m, long g, long n);

struct PolynomialityReport {
  bool ok = false;          // finite differences of order 3g-2 vanish identically
  int observed_degree = 0;  // highest order with a nonzero difference row
  std::vector<Int> values;  // sigma_g at n0, n0+2, ...
};

PolynomialityReport polynomiality_check(const MatrixParams& m, long g, long n0,
                                        int count);

struct RatioRow {
  long n = 0, pn = 0, qn = 0;
  Int sigma, dim;
  Rational ratio;      // sigma / dim
  Rational limit;      // limit_trace / d^{3(g-1)}
  Rational err;        // |ratio/limit - 1| (|ratio| when the limit vanishes)
  bool limit_nonzero = true;
};

std::vector<RatioRow> ratio_table(const MatrixParams& m, long g,
                                  const std::vector<long>& ns);

struct SweepRow {
  long b = 0, d = 0, a = 0, c = 0;
  bool ok = false;
};

// all admissible (b, d) with 0 <= b < d < dmax, smallest even c > 0 and the odd a
// forced by the determinant; reports condition H for each
std::vector<SweepRow> condition_h_sweep(long dmax, unsigned threads = 1);

}  // namespace parab
