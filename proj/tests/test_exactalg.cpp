#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "parab/errors.hpp"
#include "parab/laurent.hpp"
#include "parab/quotient.hpp"
#include "parab/serialize.hpp"
#include "parab/unipoly.hpp"

using namespace parab;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  int d = deg(rng);
  std::vector<Rational> c;
  c.reserve(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c.emplace_back(make_rational(num(rng), den(rng)));
  return UniPoly(std::move(c));
}

LaurentBiPoly random_laurent(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<long> e(-3, 3);
  std::uniform_int_distribution<long> c(-5, 5);
  LaurentBiPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(e(rng), e(rng), GaussInt(c(rng), c(rng)));
  return p;
}

}  // namespace

TEST_CASE("polynomial basics") {
  UniPoly p({1, 0, 2});  // 1 + 2x^2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == 2);
  CHECK(p.coeff(7) == 0);
  CHECK(p.leading() == 2);
  CHECK(p.integer_coeffs());
  CHECK(p.eval(Rational(3)) == 19);

  UniPoly q = UniPoly::x() * UniPoly::x() - UniPoly::constant(Rational(1));
  CHECK((p + q) == UniPoly({0, 0, 3}));
  CHECK((p - p).is_zero());
  CHECK((p * q) == UniPoly({-1, 0, -1, 0, 2}));  // (1+2x^2)(x^2-1)
  CHECK(-p == UniPoly({-1, 0, -2}));
  CHECK(p.shifted(2) == UniPoly({0, 0, 1, 0, 2}));
  CHECK(p.derivative() == UniPoly({0, 4}));
  CHECK(UniPoly({2, 4}).monic() == UniPoly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
  CHECK(UniPoly::monomial(Rational(3), 4) == UniPoly({0, 0, 0, 0, 3}));
  CHECK_FALSE(UniPoly(std::vector<Rational>{Rational(1, 2)}).integer_coeffs());
  CHECK(UniPoly({0, 0, 0}).is_zero());
  CHECK(UniPoly().degree() == -1);
}

TEST_CASE("division with remainder") {
  UniPoly num({-1, 0, 0, 1});  // x^3 - 1
  UniPoly den({-1, 1});        // x - 1
  PolyDivision d = poly_divmod(num, den);
  CHECK(d.quot == UniPoly({1, 1, 1}));
  CHECK(d.rem.is_zero());

  // non-monic divisor
  PolyDivision e = poly_divmod(UniPoly({1, 0, 1}), UniPoly({-2, 0, 2}));
  CHECK(e.quot == UniPoly(std::vector<Rational>{Rational(1, 2)}));
  CHECK(e.rem == UniPoly({2}));

  std::mt19937_64 rng(0xC0FFEE01);
  for (int i = 0; i < 200; ++i) {
    UniPoly a = random_poly(rng, 7);
    UniPoly b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    PolyDivision pd = poly_divmod(a, b);
    CHECK(pd.quot * b + pd.rem == a);
    CHECK(pd.rem.degree() < b.degree());
  }
}

TEST_CASE("gcd and squarefree detection") {
  UniPoly g = poly_gcd(UniPoly({-1, 0, 1}), UniPoly({1, -2, 1}));
  CHECK(g == UniPoly({-1, 1}));  // gcd(x^2-1, (x-1)^2) = x - 1

  CHECK(poly_gcd(UniPoly({1, 1}), UniPoly({2})).degree() == 0);
  CHECK(is_squarefree(UniPoly({1, 0, -1, 0, 1})));   // x^4 - x^2 + 1
  CHECK(is_squarefree(UniPoly({12, 23, 16, 4})));    // irreducible cubic
  CHECK_FALSE(is_squarefree(UniPoly({1, -2, 1})));   // (x-1)^2
  CHECK_FALSE(is_squarefree(UniPoly({0, 0, 1})));    // x^2
  CHECK(poly_coprime(UniPoly({1, 0, 1}), UniPoly({-1, 1})));
  CHECK_FALSE(poly_coprime(UniPoly({-1, 0, 1}), UniPoly({1, -2, 1})));

  std::mt19937_64 rng(0xC0FFEE02);
  for (int i = 0; i < 60; ++i) {
    UniPoly a = random_poly(rng, 5);
    UniPoly b = random_poly(rng, 5);
    if (a.is_zero() || b.is_zero()) continue;
    UniPoly d = poly_gcd(a, b);
    CHECK(poly_divmod(a, d).rem.is_zero());
    CHECK(poly_divmod(b, d).rem.is_zero());
    CHECK(d.leading() == 1);
  }
}

TEST_CASE("content and primitive part") {
  UniPoly p(std::vector<Rational>{Rational(4, 3), Rational(2, 3), Rational(2)});
  Rational c = poly_content(p);
  UniPoly prim = poly_primitive(p);
  CHECK(prim * c == p);
  CHECK(prim.integer_coeffs());
  CHECK(poly_content(prim) == 1);
}

TEST_CASE("scalar continuants") {
  std::vector<Rational> a{Rational(2), Rational(3), Rational(4)};
  CHECK(scalar_continuant({}) == 1);
  CHECK(scalar_continuant({Rational(2)}) == 2);
  CHECK(scalar_continuant({Rational(2), Rational(3)}) == 7);
  CHECK(scalar_continuant(a) == 30);  // 4*7 + 2
}

TEST_CASE("quotient ring inversion") {
  QuotientRing gauss(UniPoly({1, 0, 1}));  // x^2 + 1
  CHECK(gauss.x().invert() == -gauss.x());
  CHECK(gauss.x().invert() * gauss.x() == gauss.one());

  QuotientRing cyc12(UniPoly({1, 0, -1, 0, 1}));  // x^4 - x^2 + 1
  QuotientElem u = cyc12.one() - cyc12.x() * cyc12.x();
  CHECK(u.invert() == cyc12.x().pow(2));

  QuotientRing sq(UniPoly({1, -2, 1}));  // (x-1)^2
  QuotientElem bad = sq.x() - sq.one();
  CHECK_THROWS_AS((void)bad.invert(), not_invertible);
  try {
    (void)bad.invert();
  } catch (const not_invertible& e) {
    CHECK(e.gcd_text.find("x") != std::string::npos);
  }
}

TEST_CASE("trace of multiplication operators") {
  QuotientRing gauss(UniPoly({1, 0, 1}));
  CHECK(quotient_trace(gauss.x() * gauss.x()) == -2);
  CHECK(quotient_trace(gauss.one()) == 2);
  CHECK(quotient_trace(gauss.x()) == 0);

  // (x-1)(x-2)(x-3): power sums of roots are 6, 14, 36
  QuotientRing split(UniPoly({-6, 11, -6, 1}));
  CHECK(quotient_trace(split.x()) == 6);
  CHECK(quotient_trace(split.x().pow(2)) == 14);
  CHECK(quotient_trace(split.x().pow(3)) == 36);

  // non-monic modulus 2x^2 - 2: x^2 reduces to 1
  QuotientRing nm(UniPoly({-2, 0, 2}));
  CHECK(nm.reduce(UniPoly({0, 0, 1})) == UniPoly({1}));
  CHECK(quotient_trace(nm.x()) == 0);
  CHECK(quotient_trace(nm.x().pow(2)) == 2);
}

TEST_CASE("quotient ring algebra laws") {
  QuotientRing ring(UniPoly({1, 0, -1, 0, 1}));
  std::mt19937_64 rng(0xC0FFEE03);
  for (int i = 0; i < 100; ++i) {
    QuotientElem a = ring.elem(random_poly(rng, 6));
    QuotientElem b = ring.elem(random_poly(rng, 6));
    QuotientElem c = ring.elem(random_poly(rng, 6));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
  CHECK(ring.x().pow(0) == ring.one());
  CHECK(ring.x().pow(5) == ring.x() * ring.x().pow(4));
}

TEST_CASE("polynomial composition into a ring") {
  QuotientRing gauss(UniPoly({1, 0, 1}));
  // f(x) = x^2 + 3x + 1 at x: -1 + 3x + 1 = 3x
  CHECK(compose(UniPoly({1, 3, 1}), gauss.x()) == gauss.x() * Rational(3));
  CHECK(compose(UniPoly({7}), gauss.x()) == gauss.constant(Rational(7)));
  CHECK(compose(UniPoly(), gauss.x()).is_zero());
}

TEST_CASE("gaussian integer units") {
  GaussInt one(1, 0);
  CHECK(one.times_i_pow(0) == GaussInt(1, 0));
  CHECK(one.times_i_pow(1) == GaussInt(0, 1));
  CHECK(one.times_i_pow(2) == GaussInt(-1, 0));
  CHECK(one.times_i_pow(3) == GaussInt(0, -1));
  CHECK(one.times_i_pow(4) == GaussInt(1, 0));
  CHECK(one.times_i_pow(-1) == GaussInt(0, -1));
  CHECK(one.times_i_pow(-7) == GaussInt(0, 1));
  CHECK(GaussInt(2, 5) * GaussInt(1, -1) == GaussInt(7, 3));
}

TEST_CASE("laurent polynomial arithmetic") {
  LaurentBiPoly q;  // U^2 V - U^-2 V^-1
  q.add_term(2, 1, GaussInt(1, 0));
  q.add_term(-2, -1, GaussInt(-1, 0));
  LaurentBiPoly sq = q * q;
  LaurentBiPoly expect;
  expect.add_term(4, 2, GaussInt(1, 0));
  expect.add_term(0, 0, GaussInt(-2, 0));
  expect.add_term(-4, -2, GaussInt(1, 0));
  CHECK(sq == expect);
  CHECK(sq == q.pow(2));
  CHECK(q.pow(0) == LaurentBiPoly::monomial(GaussInt(1, 0), 0, 0));
  CHECK(q.is_real());
  CHECK(q.coeff(2, 1) == GaussInt(1, 0));
  CHECK(q.coeff(0, 0).is_zero());
  CHECK(q.v_min() == -1);
  CHECK(q.v_max() == 1);

  // cancellation removes the stored term
  LaurentBiPoly z = q - q;
  CHECK(z.is_zero());

  // substitutions on the frozen example
  CHECK(q.subst_negate_u() == q);
  CHECK(q.subst_negate_v() == -q);
  CHECK(q.subst_invert_uv() == -q);

  // U -> t, V -> t^3 folds onto the U axis
  LaurentBiPoly ev = q.eval_exponents(1, 3);
  LaurentBiPoly ev_expect;
  ev_expect.add_term(5, 0, GaussInt(1, 0));
  ev_expect.add_term(-5, 0, GaussInt(-1, 0));
  CHECK(ev == ev_expect);

  LaurentBiPoly top = q.v_slice(1);
  CHECK(top == LaurentBiPoly::monomial(GaussInt(1, 0), 2, 0));
}

TEST_CASE("laurent substitution involutions") {
  std::mt19937_64 rng(0xC0FFEE04);
  for (int i = 0; i < 50; ++i) {
    LaurentBiPoly p = random_laurent(rng, 6);
    CHECK(p.subst_negate_u().subst_negate_u() == p);
    CHECK(p.subst_negate_v().subst_negate_v() == p);
    CHECK(p.subst_invert_uv().subst_invert_uv() == p);
    CHECK(p.conj().conj() == p);
    LaurentBiPoly q = random_laurent(rng, 4);
    CHECK((p * q).conj() == p.conj() * q.conj());
    CHECK((p + q).subst_invert_uv() == p.subst_invert_uv() + q.subst_invert_uv());
  }
}

TEST_CASE("newton polygon of the support") {
  LaurentBiPoly seg;
  seg.add_term(-2, -1, GaussInt(1, 0));
  seg.add_term(0, 0, GaussInt(5, 0));  // collinear midpoint, not a vertex
  seg.add_term(2, 1, GaussInt(1, 0));
  auto hull = newton_polygon(seg);
  REQUIRE(hull.size() == 2);
  CHECK(hull[0] == std::make_pair(-2L, -1L));
  CHECK(hull[1] == std::make_pair(2L, 1L));

  LaurentBiPoly square;
  for (long u = 0; u <= 1; ++u)
    for (long v = 0; v <= 1; ++v) square.add_term(u, v, GaussInt(1, 1));
  square.add_term(0, 0, GaussInt(1, 0));  // overwrite is additive; still inside
  auto sq_hull = newton_polygon(square);
  REQUIRE(sq_hull.size() == 4);
  CHECK(sq_hull[0] == std::make_pair(0L, 0L));
  CHECK(sq_hull[1] == std::make_pair(1L, 0L));
  CHECK(sq_hull[2] == std::make_pair(1L, 1L));
  CHECK(sq_hull[3] == std::make_pair(0L, 1L));

  LaurentBiPoly point = LaurentBiPoly::monomial(GaussInt(2, 0), 3, -4);
  auto pt_hull = newton_polygon(point);
  REQUIRE(pt_hull.size() == 1);
  CHECK(pt_hull[0] == std::make_pair(3L, -4L));
}

TEST_CASE("json round trips") {
  UniPoly p(std::vector<Rational>{Rational(3, 2), Rational(-7, 3), Rational(0), Rational(1)});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(UniPoly()).is_array());
  CHECK(poly_from_json(poly_to_json(UniPoly())).is_zero());
  CHECK(poly_to_json(p)[0].get<std::string>() == "3/2");

  std::mt19937_64 rng(0xC0FFEE05);
  for (int i = 0; i < 30; ++i) {
    LaurentBiPoly l = random_laurent(rng, 5);
    CHECK(laurent_from_json(laurent_to_json(l)) == l);
    UniPoly r = random_poly(rng, 6);
    CHECK(poly_from_json(poly_to_json(r)) == r);
  }

  CHECK_THROWS_AS((void)poly_from_json(Json::parse("[\"x\"]")), invalid_params);
  CHECK_THROWS_AS((void)laurent_from_json(Json::parse("[[0]]")), invalid_params);
}

TEST_CASE("rational helpers") {
  CHECK(rational_string(make_rational(-4, 6)) == "-2/3");
  CHECK(rational_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(to_integer(make_rational(8, 2)) == 4);
  CHECK_THROWS_AS((void)to_integer(Rational(1, 2)), integrality_violation);
  CHECK_THROWS_AS((void)make_rational(1, 0), invalid_params);
  CHECK(floordiv(-7L, 2L) == -4);
  CHECK(floordiv(7L, 2L) == 3);
  CHECK(floordiv(Int(-7), Int(2)) == -4);
}
