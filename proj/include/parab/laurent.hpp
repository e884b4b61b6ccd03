#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parab/rational.hpp"

namespace parab {

struct GaussInt {
  Int re, im;
  GaussInt() : re(0), im(0) {}
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt times_i_pow(long k) const;
};

// sparse Laurent polynomial in U, V over Z[i]; keys are (u_exp, v_exp)
class LaurentBiPoly {
 public:
  using Key = std::pair<long, long>;
  using Map = std::map<Key, GaussInt>;

  LaurentBiPoly() = default;
  static LaurentBiPoly monomial(const GaussInt& c, long ue, long ve);

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_real() const;
  GaussInt coeff(long ue, long ve) const;
  void add_term(long ue, long ve, const GaussInt& c);

  LaurentBiPoly operator+(const LaurentBiPoly& o) const;
  LaurentBiPoly operator-(const LaurentBiPoly& o) const;
  LaurentBiPoly operator*(const LaurentBiPoly& o) const;
  LaurentBiPoly operator-() const;
  LaurentBiPoly scale(const GaussInt& c) const;
  bool operator==(const LaurentBiPoly& o) const { return t_ == o.t_; }

  LaurentBiPoly pow(long e) const;  // e >= 0

  LaurentBiPoly subst_negate_u() const;   // U -> -U
  LaurentBiPoly subst_negate_v() const;   // V -> -V
  LaurentBiPoly subst_invert_uv() const;  // (U,V) -> (U^-1, V^-1)
  LaurentBiPoly conj() const;

  // substitute U -> t^a, V -> t^b; result lives on the U axis of a fresh poly
  LaurentBiPoly eval_exponents(long a, long b) const;
  // terms with v_exp == j, with v cleared; a univariate Laurent in U
  LaurentBiPoly v_slice(long j) const;
  long v_min() const;
  long v_max() const;

  std::string str() const;

 private:
  Map t_;  // no zero coefficients stored
};

// convex hull of the support, vertices only (no collinear points),
// counterclockwise, starting at the lexicographically smallest vertex
std::vector<std::pair<long, long>> newton_polygon(const LaurentBiPoly& p);

}  // namespace parab
