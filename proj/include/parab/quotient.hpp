#pragma once

#include <memory>

#include "parab/unipoly.hpp"

namespace parab {

class QuotientElem;

// Q[x]/(modulus), modulus of degree >= 1 with nonzero leading coefficient
class QuotientRing {
 public:
  QuotientRing() = default;
  explicit QuotientRing(UniPoly modulus);

  const UniPoly& modulus() const { return *mod_; }
  int dim() const { return mod_->degree(); }
  bool same_ring(const QuotientRing& o) const;

  UniPoly reduce(UniPoly f) const;
  QuotientElem elem(UniPoly rep) const;
  QuotientElem zero() const;
  QuotientElem one() const;
  QuotientElem x() const;
  QuotientElem constant(const Rational& r) const;

 private:
  friend class QuotientElem;
  std::shared_ptr<const UniPoly> mod_;
};

class QuotientElem {
 public:
  QuotientElem() = default;

  const UniPoly& rep() const { return rep_; }
  const QuotientRing& ring() const { return ring_; }
  bool is_zero() const { return rep_.is_zero(); }

  QuotientElem operator-() const;
  QuotientElem operator+(const QuotientElem& o) const;
  QuotientElem operator-(const QuotientElem& o) const;
  QuotientElem operator*(const QuotientElem& o) const;
  QuotientElem operator*(const Rational& s) const;
  bool operator==(const QuotientElem& o) const;
  bool operator!=(const QuotientElem& o) const { return !(*this == o); }

  QuotientElem pow(long e) const;  // e >= 0
  // extended Euclid; throws not_invertible carrying the monic gcd
  QuotientElem invert() const;

 private:
  friend class QuotientRing;
  friend Rational quotient_trace(const QuotientElem&);
  QuotientElem(QuotientRing ring, UniPoly rep)
      : ring_(std::move(ring)), rep_(std::move(rep)) {}
  QuotientRing ring_;
  UniPoly rep_;
};

// trace of the multiplication-by-e endomorphism of Q[x]/(m) over Q
Rational quotient_trace(const QuotientElem& e);

// f(at) by Horner in the ring of `at`
QuotientElem compose(const UniPoly& f, const QuotientElem& at);

}  // namespace parab
