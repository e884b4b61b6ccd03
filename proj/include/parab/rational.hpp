#pragma once

#include <gmpxx.h>

#include <string>

#include "parab/errors.hpp"

namespace parab {

using Int = mpz_class;
using Rational = mpq_class;

// floor division with sign-correct behavior for negative operands
inline Int floordiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw invalid_params("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Int to_integer(const Rational& r) {
  if (!is_integer(r))
    throw integrality_violation("expected integer, got " + r.get_str());
  return r.get_num();
}

// canonical "num/den" text, always with the slash, denominator positive
inline std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw invalid_params("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace parab
