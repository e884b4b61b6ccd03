#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "parab/rational.hpp"

namespace parab {

// dense univariate polynomial over Q, coefficients ascending, no trailing zeros
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<long> ints) {
    c_.reserve(ints.size());
    for (long v : ints) c_.emplace_back(v);
    trim();
  }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& r) { return UniPoly(std::vector<Rational>{r}); }
  static UniPoly x() { return UniPoly({0, 1}); }
  // c * x^k
  static UniPoly monomial(const Rational& coeff, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const;  // 0 outside the stored range
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;
  bool integer_coeffs() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly shifted(int k) const;  // multiply by x^k, k >= 0
  UniPoly derivative() const;
  Rational eval(const Rational& at) const;
  UniPoly monic() const;
  std::string str(const std::string& var = "x") const;

  // in-place helpers used by hot loops
  void add_scaled(const UniPoly& o, const Rational& s, int shift);
  void trim();

 private:
  std::vector<Rational> c_;
};

UniPoly operator*(const Rational& s, const UniPoly& p);

// quotient and remainder against a divisor with nonzero leading coefficient
struct PolyDivision {
  UniPoly quot, rem;
};
PolyDivision poly_divmod(const UniPoly& num, const UniPoly& den);

// monic gcd over Q (primitive PRS fast path for integer inputs)
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// true iff gcd(p, p') is constant; modular certificate fast path, exact fallback
bool is_squarefree(const UniPoly& p);

// true iff the monic gcd is 1; same certificate strategy as is_squarefree
bool poly_coprime(const UniPoly& a, const UniPoly& b);

// gcd of all numerators divided by lcm-style denominator handling; p = content * primitive
Rational poly_content(const UniPoly& p);
UniPoly poly_primitive(const UniPoly& p);

// scalar continuant over a coefficient list: K() = 1, K(a1) = a1,
// K(a1..an) = an * K(a1..a_{n-1}) + K(a1..a_{n-2})
Rational scalar_continuant(const std::vector<Rational>& a);

}  // namespace parab
