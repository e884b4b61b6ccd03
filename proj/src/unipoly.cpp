#include "parab/unipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace parab {

namespace {
const Rational kZero(0);
}

UniPoly UniPoly::monomial(const Rational& coeff, int k) {
  if (coeff == 0) return UniPoly();
  std::vector<Rational> c(static_cast<size_t>(k) + 1);
  c[static_cast<size_t>(k)] = coeff;
  return UniPoly(std::move(c));
}

const Rational& UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

bool UniPoly::integer_coeffs() const {
  for (const auto& r : c_)
    if (!is_integer(r)) return false;
  return true;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] += o.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] -= o.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  Rational t;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      t = c_[i] * o.c_[j];
      c[i + j] += t;
    }
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> c(c_.size() + static_cast<size_t>(k));
  for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(k)] = c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= at;
    acc += c_[i];
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

void UniPoly::add_scaled(const UniPoly& o, const Rational& s, int shift) {
  if (o.is_zero() || s == 0) return;
  size_t need = o.c_.size() + static_cast<size_t>(shift);
  if (c_.size() < need) c_.resize(need);
  Rational t;
  for (size_t i = 0; i < o.c_.size(); ++i) {
    t = o.c_[i] * s;
    c_[i + static_cast<size_t>(shift)] += t;
  }
  trim();
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& v = coeff(k);
    if (v == 0) continue;
    Rational a = v;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0 && k > 0) {
      os << "-";
      a = -a;
    }
    first = false;
    bool unit = (a == 1) && k > 0;
    if (!unit) os << a.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

PolyDivision poly_divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw invalid_params("polynomial division by zero");
  UniPoly rem = num;
  int dd = den.degree();
  if (rem.degree() < dd) return {UniPoly(), rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - dd) + 1);
  Rational lead_inv = 1 / den.leading();
  std::vector<Rational> r = rem.coeffs();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[static_cast<size_t>(k)] == 0) continue;
    Rational f = r[static_cast<size_t>(k)] * lead_inv;
    q[static_cast<size_t>(k - dd)] = f;
    // subtract f * x^(k-dd) * den
    for (int j = 0; j <= dd; ++j)
      r[static_cast<size_t>(k - dd + j)] -= f * den.coeff(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

Rational poly_content(const UniPoly& p) {
  if (p.is_zero()) return Rational(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& r : p.coeffs()) {
    if (r == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
  }
  Rational c = make_rational(num_gcd, den_lcm);
  if (p.leading() < 0) c = -c;
  return c;
}

UniPoly poly_primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / poly_content(p));
}

namespace {

// primitive PRS over Z; inputs must be primitive with integer coefficients
UniPoly primitive_prs_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    // pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b stays integral
    int k = a.degree() - b.degree() + 1;
    if (k < 1) k = 1;
    Rational scale(1);
    for (int i = 0; i < k; ++i) scale *= b.leading();
    UniPoly r = poly_divmod(a * scale, b).rem;
    a = b;
    b = r.is_zero() ? r : poly_primitive(r);
  }
  return a;
}

struct ModPoly {
  std::vector<uint64_t> c;  // ascending, trimmed
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

ModPoly reduce_mod(const UniPoly& p, uint64_t m) {
  ModPoly r;
  r.c.resize(static_cast<size_t>(p.degree()) + 1);
  Int mi(static_cast<unsigned long>(m));
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& q = p.coeff(i);
    Int num = q.get_num() % mi;
    if (num < 0) num += mi;
    Int den = q.get_den() % mi;
    if (den == 0) return {};  // denominator collapses, prime unusable
    uint64_t di = powmod(den.get_ui(), m - 2, m);
    r.c[static_cast<size_t>(i)] = mulmod(num.get_ui(), di, m);
  }
  r.trim();
  return r;
}

int gcd_degree_mod(const UniPoly& pa, const UniPoly& pb, uint64_t m) {
  // returns -1 when the prime is unusable (leading coeff drops or denominator hits m)
  if (pa.is_zero() || pb.is_zero()) return -1;
  ModPoly a = reduce_mod(pa, m), b = reduce_mod(pb, m);
  if (a.degree() != pa.degree() || b.degree() != pb.degree()) return -1;
  while (!b.c.empty()) {
    // a mod b
    int db = b.degree();
    uint64_t binv = powmod(b.c.back(), m - 2, m);
    for (int k = a.degree(); k >= db; --k) {
      uint64_t f = mulmod(a.c[static_cast<size_t>(k)], binv, m);
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) {
        uint64_t& t = a.c[static_cast<size_t>(k - db + j)];
        uint64_t sub = mulmod(f, b.c[static_cast<size_t>(j)], m);
        t = (t >= sub) ? t - sub : t + m - sub;
      }
    }
    a.trim();
    if (a.degree() >= db) return -1;  // no cancellation, modulus unusable
    std::swap(a, b);
  }
  return a.degree();
}

constexpr uint64_t kPrimes[] = {
    4611686018427388039ULL,  // 2^62 + 135
    4611686018427388073ULL,  // 2^62 + 169
    4611686018427388081ULL,  // 2^62 + 177
    4611686018427388091ULL,  // 2^62 + 187
};

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.integer_coeffs() && b.integer_coeffs())
    return primitive_prs_gcd(poly_primitive(a), poly_primitive(b)).monic();
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = poly_divmod(x, y).rem;
    x = y;
    y = r;
  }
  return x.monic();
}

bool poly_coprime(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.degree() == 0 || b.degree() == 0) return true;
  for (uint64_t m : kPrimes) {
    int d = gcd_degree_mod(a, b, m);
    if (d == 0) return true;  // coprime mod m certifies coprime over Q
  }
  return poly_gcd(a, b).degree() == 0;
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return poly_coprime(p, p.derivative());
}

Rational scalar_continuant(const std::vector<Rational>& a) {
  Rational prev(1), cur = a.empty() ? Rational(1) : a[0];
  if (a.empty()) return Rational(1);
  for (size_t i = 1; i < a.size(); ++i) {
    Rational next = a[i] * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace parab
