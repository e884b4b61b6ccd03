#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "parab/errors.hpp"
#include "parab/torsion.hpp"

using namespace parab;

TEST_CASE("first torsion closed values") {
  ParabolicAlgebra t = build_algebra(3, 1);
  TorsionPair tp = tau1(t);
  CHECK(tp.match());
  CHECK(tp.simple.rep() == UniPoly({-2}));

  ParabolicAlgebra f = build_algebra(5, 3);
  TorsionPair fp = tau1(f);
  CHECK(fp.match());
  CHECK(fp.simple.rep() == UniPoly({2}));
}

TEST_CASE("adjoint torsion closed values") {
  ParabolicAlgebra t = build_algebra(3, 1);
  TorsionPair tp = tau2(t);
  CHECK(tp.match());
  CHECK(tp.simple.rep() == UniPoly(std::vector<Rational>{Rational(-1, 2)}));

  ParabolicAlgebra f = build_algebra(5, 3);
  TorsionPair fp = tau2(f);
  CHECK(fp.match());
  CHECK(fp.simple.rep() ==
        UniPoly(std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(1)}));
}

TEST_CASE("torsion routes agree on a sweep") {
  for (long p = 3; p <= 19; p += 2) {
    for (long q = 1; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      ParabolicAlgebra v = build_algebra(p, q);
      CHECK(tau1(v).match());
      CHECK(tau2(v).match());
    }
  }
}

TEST_CASE("determinant route for the scaled first torsion") {
  ParabolicAlgebra t = build_algebra(3, 1);
  CHECK(tau1_delta(t).rep() == UniPoly({2}));

  for (auto [p, q] : {std::pair<long, long>{3, 1}, {5, 3}, {7, 3}, {9, 5}, {7, 1}}) {
    ParabolicAlgebra v = build_algebra(p, q);
    QuotientElem delta = tau1_delta(v);
    QuotientElem xsq = v.x() * v.x();
    CHECK(delta == xsq * tau1(v).simple);
    // delta is a unit with half the partner continuant as inverse
    CHECK(delta * v.pb(v.tb.ell - 1) * Rational(1, 2) == v.ring.one());
  }
}

TEST_CASE("inverse sums of the first torsion") {
  CHECK(inverse_sum_tau1(build_algebra(5, 3)) == 1);
  CHECK(inverse_sum_tau1(build_algebra(7, 3)) == -1);
  CHECK(inverse_sum_tau1(build_algebra(9, 5)) == -1);
  // q = 1 collapses to a closed form in p
  for (long p = 3; p <= 13; p += 2) {
    ParabolicAlgebra v = build_algebra(p, 1);
    CHECK(inverse_sum_tau1(v) == Rational(2 - p, 2));
    CHECK(expected_inverse_sum_tau1(v.tb) == Rational(2 - p, 2));
  }
  for (long p = 3; p <= 17; p += 2) {
    for (long q = 3; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      ParabolicAlgebra v = build_algebra(p, q);
      Rational s = inverse_sum_tau1(v);
      CHECK(s == expected_inverse_sum_tau1(v.tb));
      CHECK((s == 1 || s == -1));
    }
  }
}

TEST_CASE("inverse sums of the adjoint torsion vanish") {
  for (auto [p, q] : {std::pair<long, long>{5, 3}, {7, 3}, {7, 5}, {9, 5}, {9, 7}, {11, 3}}) {
    ParabolicAlgebra v = build_algebra(p, q);
    CHECK(inverse_sum_tau2(v) == 0);
  }
  CHECK_THROWS_AS((void)inverse_sum_tau2(build_algebra(7, 1)), invalid_params);
}

TEST_CASE("cusp shape elements") {
  ParabolicAlgebra t = build_algebra(3, 1);
  CHECK(cusp_shape(t).rep() == UniPoly({-2}));

  ParabolicAlgebra f = build_algebra(5, 3);
  CHECK(cusp_shape(f).rep() == UniPoly({-2, 0, 4}));
}

TEST_CASE("partner presentation checks") {
  // self-partnered pair: q * ell = -1 mod p, observed transport sign -1
  ReciprocityReport r53 = reciprocity_check(build_algebra(5, 3));
  CHECK(r53.partner_ell == 3);
  CHECK(r53.riley_vanishes);
  CHECK(r53.maps_inverse);
  CHECK(r53.q_transform);
  CHECK(r53.omega_sign == -1);
  CHECK(r53.expected_omega_sign == -1);
  CHECK(r53.all());

  // q * ell = +1 mod p keeps the transported form on the nose
  ReciprocityReport r73 = reciprocity_check(build_algebra(7, 3));
  CHECK(r73.partner_ell == 5);
  CHECK(r73.omega_sign == 1);
  CHECK(r73.expected_omega_sign == 1);
  CHECK(r73.all());

  ReciprocityReport r95 = reciprocity_check(build_algebra(9, 5));
  CHECK(r95.partner_ell == 7);
  CHECK(r95.expected_omega_sign == -1);
  CHECK(r95.all());

  ReciprocityReport r75 = reciprocity_check(build_algebra(7, 5));
  CHECK(r75.partner_ell == 3);
  CHECK(r75.expected_omega_sign == 1);
  CHECK(r75.all());

  // q = 1 is its own partner through the identity substitution
  ReciprocityReport r71 = reciprocity_check(build_algebra(7, 1));
  CHECK(r71.partner_ell == 1);
  CHECK(r71.omega_sign == 1);
  CHECK(r71.all());
}

TEST_CASE("partner transport sign follows the congruence") {
  for (long p = 3; p <= 25; p += 2) {
    for (long q = 1; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      ParabolicAlgebra v = build_algebra(p, q);
      ReciprocityReport rep = reciprocity_check(v);
      CHECK(rep.all());
      int want = (q * v.tb.ell) % p == 1 ? 1 : -1;
      CHECK(rep.omega_sign == want);
    }
  }
}
