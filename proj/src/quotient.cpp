#include "parab/quotient.hpp"

namespace parab {

QuotientRing::QuotientRing(UniPoly modulus) {
  if (modulus.degree() < 1)
    throw invalid_params("quotient ring needs a modulus of degree >= 1");
  mod_ = std::make_shared<const UniPoly>(std::move(modulus));
}

bool QuotientRing::same_ring(const QuotientRing& o) const {
  if (mod_ == o.mod_) return true;
  if (!mod_ || !o.mod_) return false;
  return *mod_ == *o.mod_;
}

UniPoly QuotientRing::reduce(UniPoly f) const {
  const UniPoly& m = *mod_;
  int dm = m.degree();
  if (f.degree() < dm) return f;
  std::vector<Rational> r = f.coeffs();
  Rational lead_inv = 1 / m.leading();
  Rational t;
  for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
    if (r[static_cast<size_t>(k)] == 0) continue;
    Rational f0 = r[static_cast<size_t>(k)] * lead_inv;
    for (int j = 0; j <= dm; ++j) {
      t = f0 * m.coeff(j);
      r[static_cast<size_t>(k - dm + j)] -= t;
    }
  }
  r.resize(static_cast<size_t>(dm));
  return UniPoly(std::move(r));
}

QuotientElem QuotientRing::elem(UniPoly rep) const {
  if (!mod_) throw invalid_params("uninitialized quotient ring");
  return QuotientElem(*this, reduce(std::move(rep)));
}

QuotientElem QuotientRing::zero() const { return elem(UniPoly()); }
QuotientElem QuotientRing::one() const { return elem(UniPoly({1})); }
QuotientElem QuotientRing::x() const { return elem(UniPoly::x()); }
QuotientElem QuotientRing::constant(const Rational& r) const {
  return elem(UniPoly::constant(r));
}

namespace {
void check_rings(const QuotientElem& a, const QuotientElem& b) {
  if (!a.ring().same_ring(b.ring()))
    throw invalid_params("mixed quotient rings in element arithmetic");
}
}  // namespace

QuotientElem QuotientElem::operator-() const { return QuotientElem(ring_, -rep_); }

QuotientElem QuotientElem::operator+(const QuotientElem& o) const {
  check_rings(*this, o);
  return QuotientElem(ring_, rep_ + o.rep_);
}

QuotientElem QuotientElem::operator-(const QuotientElem& o) const {
  check_rings(*this, o);
  return QuotientElem(ring_, rep_ - o.rep_);
}

QuotientElem QuotientElem::operator*(const QuotientElem& o) const {
  check_rings(*this, o);
  return QuotientElem(ring_, ring_.reduce(rep_ * o.rep_));
}

QuotientElem QuotientElem::operator*(const Rational& s) const {
  return QuotientElem(ring_, rep_ * s);
}

bool QuotientElem::operator==(const QuotientElem& o) const {
  check_rings(*this, o);
  return rep_ == o.rep_;
}

QuotientElem QuotientElem::pow(long e) const {
  if (e < 0) throw invalid_params("pow with negative exponent; invert first");
  QuotientElem acc = ring_.one();
  QuotientElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

QuotientElem QuotientElem::invert() const {
  // invariant: s_i * rep == r_i (mod modulus)
  UniPoly r0 = ring_.modulus(), r1 = rep_;
  UniPoly s0, s1({1});
  while (!r1.is_zero()) {
    PolyDivision d = poly_divmod(r0, r1);
    UniPoly r2 = d.rem;
    UniPoly s2 = s0 - d.quot * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0)
    throw not_invertible("element shares a factor with the modulus", r0.monic().str());
  return QuotientElem(ring_, ring_.reduce(s0 * (1 / r0.coeff(0))));
}

Rational quotient_trace(const QuotientElem& e) {
  const QuotientRing& ring = e.ring();
  int n = ring.dim();
  Rational tr(0);
  UniPoly cur = e.rep();
  for (int k = 0; k < n; ++k) {
    tr += cur.coeff(k);
    if (k + 1 < n) cur = ring.reduce(cur.shifted(1));
  }
  return tr;
}

QuotientElem compose(const UniPoly& f, const QuotientElem& at) {
  QuotientElem acc = at.ring().zero();
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * at;
    if (f.coeff(k) != 0) acc = acc + at.ring().constant(f.coeff(k));
  }
  return acc;
}

}  // namespace parab
