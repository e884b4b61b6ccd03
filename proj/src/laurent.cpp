#include "parab/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace parab {

GaussInt GaussInt::times_i_pow(long k) const {
  long r = k % 4;
  if (r < 0) r += 4;
  switch (r) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

LaurentBiPoly LaurentBiPoly::monomial(const GaussInt& c, long ue, long ve) {
  LaurentBiPoly p;
  if (!c.is_zero()) p.t_[{ue, ve}] = c;
  return p;
}

bool LaurentBiPoly::is_real() const {
  for (const auto& [k, c] : t_)
    if (c.im != 0) return false;
  return true;
}

GaussInt LaurentBiPoly::coeff(long ue, long ve) const {
  auto it = t_.find({ue, ve});
  return it == t_.end() ? GaussInt() : it->second;
}

void LaurentBiPoly::add_term(long ue, long ve, const GaussInt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace({ue, ve}, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LaurentBiPoly LaurentBiPoly::operator+(const LaurentBiPoly& o) const {
  LaurentBiPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

LaurentBiPoly LaurentBiPoly::operator-(const LaurentBiPoly& o) const {
  LaurentBiPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
  return r;
}

LaurentBiPoly LaurentBiPoly::operator*(const LaurentBiPoly& o) const {
  LaurentBiPoly r;
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

LaurentBiPoly LaurentBiPoly::operator-() const {
  LaurentBiPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

LaurentBiPoly LaurentBiPoly::scale(const GaussInt& s) const {
  LaurentBiPoly r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : t_) r.t_[k] = c * s;
  return r;
}

LaurentBiPoly LaurentBiPoly::pow(long e) const {
  if (e < 0) throw invalid_params("Laurent pow with negative exponent");
  LaurentBiPoly acc = monomial(GaussInt(1, 0), 0, 0);
  LaurentBiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

LaurentBiPoly LaurentBiPoly::subst_negate_u() const {
  LaurentBiPoly r;
  for (const auto& [k, c] : t_)
    r.t_[k] = (k.first % 2 != 0) ? -c : c;
  return r;
}

LaurentBiPoly LaurentBiPoly::subst_negate_v() const {
  LaurentBiPoly r;
  for (const auto& [k, c] : t_)
    r.t_[k] = (k.second % 2 != 0) ? -c : c;
  return r;
}

LaurentBiPoly LaurentBiPoly::subst_invert_uv() const {
  LaurentBiPoly r;
  for (const auto& [k, c] : t_) r.t_[{-k.first, -k.second}] = c;
  return r;
}

LaurentBiPoly LaurentBiPoly::conj() const {
  LaurentBiPoly r = *this;
  for (auto& [k, c] : r.t_) c.im = -c.im;
  return r;
}

LaurentBiPoly LaurentBiPoly::eval_exponents(long a, long b) const {
  LaurentBiPoly r;
  for (const auto& [k, c] : t_) r.add_term(a * k.first + b * k.second, 0, c);
  return r;
}

LaurentBiPoly LaurentBiPoly::v_slice(long j) const {
  LaurentBiPoly r;
  for (const auto& [k, c] : t_)
    if (k.second == j) r.t_[{k.first, 0}] = c;
  return r;
}

long LaurentBiPoly::v_min() const {
  long m = std::numeric_limits<long>::max();
  for (const auto& [k, c] : t_) m = std::min(m, k.second);
  return m;
}

long LaurentBiPoly::v_max() const {
  long m = std::numeric_limits<long>::min();
  for (const auto& [k, c] : t_) m = std::max(m, k.second);
  return m;
}

std::string LaurentBiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str();
    if (c.im != 0) os << (c.im > 0 ? "+" : "") << c.im.get_str() << "i";
    os << ")";
    if (k.first) os << "*U^" << k.first;
    if (k.second) os << "*V^" << k.second;
  }
  return os.str();
}

namespace {
using Pt = std::pair<long, long>;

// > 0 for a left turn (counterclockwise)
__int128 cross(const Pt& o, const Pt& a, const Pt& b) {
  return static_cast<__int128>(a.first - o.first) * (b.second - o.second) -
         static_cast<__int128>(a.second - o.second) * (b.first - o.first);
}
}  // namespace

std::vector<Pt> newton_polygon(const LaurentBiPoly& p) {
  std::vector<Pt> pts;
  pts.reserve(p.terms().size());
  for (const auto& [k, c] : p.terms()) pts.push_back(k);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) return pts;
  // monotone chain; popping on <= drops collinear points, output is CCW
  std::vector<Pt> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  // monotone chain starts at the sorted-least point already
  return h;
}

}  // namespace parab
