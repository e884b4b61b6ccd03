#pragma once

#include "parab/unipoly.hpp"

namespace parab {

// element of Q(i)[x] as re(x) + i*im(x); all call sites keep coefficients in Z[i]
struct GaussianPoly {
  UniPoly re, im;

  GaussianPoly() = default;
  GaussianPoly(UniPoly r, UniPoly i) : re(std::move(r)), im(std::move(i)) {}
  static GaussianPoly real(UniPoly r) { return {std::move(r), UniPoly()}; }
  static GaussianPoly zero() { return {}; }
  static GaussianPoly one() { return {UniPoly({1}), UniPoly()}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const GaussianPoly& o) const { return re == o.re && im == o.im; }

  GaussianPoly operator+(const GaussianPoly& o) const { return {re + o.re, im + o.im}; }
  GaussianPoly operator-(const GaussianPoly& o) const { return {re - o.re, im - o.im}; }
  GaussianPoly operator*(const GaussianPoly& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianPoly conj() const { return {re, -im}; }
  GaussianPoly times_i() const { return {-im, re}; }
  // multiply by i^k, any integer k
  GaussianPoly times_i_pow(long k) const;
};

struct GaussianMat2 {
  GaussianPoly a, b, c, d;  // row major: (a b; c d)

  static GaussianMat2 identity() {
    return {GaussianPoly::one(), GaussianPoly::zero(), GaussianPoly::zero(),
            GaussianPoly::one()};
  }
  GaussianMat2 operator*(const GaussianMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  GaussianMat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
};

}  // namespace parab
