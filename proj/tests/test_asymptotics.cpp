#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "parab/asymptotics.hpp"
#include "parab/errors.hpp"
#include "parab/verlinde.hpp"

using namespace parab;

namespace {

const MatrixParams kM1 = make_matrix_params(1, 0, 2, 1);
const MatrixParams kM2 = make_matrix_params(3, 2, 4, 3);

}  // namespace

TEST_CASE("matrix parameter validation") {
  CHECK_THROWS_AS((void)make_matrix_params(3, 2, 4, 5), invalid_params);   // det 7
  CHECK_THROWS_AS((void)make_matrix_params(2, 1, 1, 1), invalid_params);   // parities
  CHECK_THROWS_AS((void)make_matrix_params(1, 0, 3, 1), invalid_params);   // c odd
  CHECK_THROWS_AS((void)make_matrix_params(1, 0, -2, 1), invalid_params);  // c <= 0
  CHECK_THROWS_AS((void)make_matrix_params(3, 4, 4, 3), invalid_params);   // b >= d
  CHECK(kM2.pn(11) == 37);
  CHECK(kM2.qn(11) == 25);
}

TEST_CASE("jump sequences") {
  CHECK(alpha_sequence(kM1) == std::vector<long>{1});
  CHECK(alpha_sequence(kM2) == std::vector<long>{1, 1, 1});
  MatrixParams m = make_matrix_params(5, 2, 12, 5);
  CHECK(alpha_sequence(m) == std::vector<long>{2, 2, 3, 2, 2});
  long total = 0;
  for (long a : alpha_sequence(m)) total += a;
  CHECK(total == m.c - 1);
}

TEST_CASE("scaling polynomials") {
  HTriple h1 = h_polynomials(kM1);
  CHECK(h1.h1 == UniPoly({2, 1}));
  CHECK(h1.h2 == UniPoly({1, 1}));
  CHECK(h1.h3 == UniPoly({1}));

  HTriple h2 = h_polynomials(kM2);
  CHECK(h2.h1 == UniPoly({12, 23, 16, 4}));
  CHECK(h2.h2 == UniPoly({5, 13, 12, 4}));
  CHECK(h2.h3 == UniPoly({5, 6, 2}));

  CHECK(condition_h(h1).ok());
  CHECK(condition_h(h2).ok());
}

TEST_CASE("limit algebra and its trace table") {
  LimitAlgebra w1 = build_limit_algebra(kM1);
  CHECK(w1.ring.dim() == 1);
  CHECK(w1.omega_w.rep() == UniPoly({1}));
  for (long g = 1; g <= 6; ++g) CHECK(limit_trace(w1, g) == 1);

  LimitAlgebra w2 = build_limit_algebra(kM2);
  CHECK(w2.ring.dim() == 3);
  CHECK(w2.omega_w.rep() == UniPoly({65, 80, 28}));
  CHECK(limit_trace(w2, 1) == 3);
  // power sums of the pinned form: e1 = 1, e2 = 0, e3 = 448, so the recurrence
  // p_k = p_{k-1} + 448 p_{k-3} forces 1793 and 2241 after 1, 1, 1345
  std::vector<Rational> want{Rational(1), Rational(1), Rational(1345), Rational(1793),
                             Rational(2241)};
  for (long g = 2; g <= 6; ++g) CHECK(limit_trace(w2, g) == want[static_cast<size_t>(g - 2)]);
}

TEST_CASE("bivariate triple closed forms") {
  BivariateTriple t1 = bivariate_polys(kM1);
  LaurentBiPoly q_want;
  q_want.add_term(2, 1, GaussInt(1, 0));
  q_want.add_term(-2, -1, GaussInt(-1, 0));
  LaurentBiPoly r_want;
  r_want.add_term(1, 1, GaussInt(1, 0));
  r_want.add_term(-1, -1, GaussInt(-1, 0));
  CHECK(t1.q == q_want);
  CHECK(t1.r == r_want);
  CHECK(t1.s == LaurentBiPoly::monomial(GaussInt(1, 0), 0, 0));
  CHECK(t1.sign_q == 1);
  CHECK(t1.sign_r == 1);

  BivariateTriple t2 = bivariate_polys(kM2);
  LaurentBiPoly s_want;
  s_want.add_term(4, 2, GaussInt(1, 0));
  s_want.add_term(2, 2, GaussInt(1, 0));
  s_want.add_term(0, 0, GaussInt(-4, 0));
  s_want.add_term(-2, -2, GaussInt(1, 0));
  s_want.add_term(-4, -2, GaussInt(1, 0));
  CHECK(t2.s == s_want);
  CHECK(t2.q.is_real());
  CHECK(t2.r.is_real());
}

TEST_CASE("specialization identities extrapolate") {
  BivariateTriple t1 = bivariate_polys(kM1);
  BivariateTriple t2 = bivariate_polys(kM2);
  for (long n : {1L, 3L, 5L, 7L, 9L, 11L}) {
    CHECK(check_specialization(kM1, t1, n));
    CHECK(check_specialization(kM2, t2, n));
  }
}

TEST_CASE("structure of the bivariate polynomial") {
  QlemmaReport r1 = qlemma_report(kM1);
  CHECK(r1.symmetries);
  CHECK(r1.extreme_v);
  CHECK(r1.newton);
  CHECK(r1.u_pm_one);
  CHECK(r1.expansion_h1);
  CHECK(r1.expansion_h2);
  CHECK(r1.expansion_h3);
  CHECK(r1.all());
  CHECK(qlemma_report(kM2).all());
  CHECK(qlemma_report(make_matrix_params(5, 2, 12, 5)).all());
}

TEST_CASE("genus space dimensions") {
  CHECK(verlinde_dim(5, 2) == 20);
  CHECK(verlinde_dim(3, 1) == 2);
  for (long g = 1; g <= 8; ++g) {
    Int want = Int(1) << g;
    CHECK(verlinde_dim(3, g) == want);
  }
  // genus 2 closed form p(p^2-1)/6
  for (long p : {3L, 5L, 7L, 9L, 11L, 15L, 25L, 99L}) {
    Int ip(p);
    CHECK(verlinde_dim(p, 2) == ip * (ip * ip - 1) / 6);
  }
  for (long p : {5L, 7L, 9L}) CHECK(verlinde_dim(p, 1) == p - 1);
}

TEST_CASE("family signatures through both presentations") {
  // the n-th member of the first family is the (2+n, 1) pair
  CHECK(signature_direct(kM1, 2, 3) == 20);
  for (long n : {3L, 5L, 11L}) {
    CHECK(signature_direct(kM1, 2, n) == signature_reciprocal(kM1, 2, n));
  }
  for (long n : {11L, 13L}) {
    CHECK(signature_direct(kM2, 2, n) == signature_reciprocal(kM2, 2, n));
  }
}

TEST_CASE("signature growth is polynomial") {
  PolynomialityReport rep = polynomiality_check(kM2, 2, 11, 8);
  CHECK(rep.ok);
  CHECK(rep.observed_degree <= 3);
  CHECK(rep.values.size() == 8);

  PolynomialityReport rep1 = polynomiality_check(kM1, 2, 11, 8);
  CHECK(rep1.ok);
  CHECK(rep1.observed_degree <= 3);
}

TEST_CASE("ratio rows") {
  std::vector<RatioRow> rows = ratio_table(kM2, 2, {11, 13});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 11);
  CHECK(rows[0].pn == 37);
  CHECK(rows[0].qn == 25);
  CHECK(rows[0].limit == Rational(1, 27));
  CHECK(rows[0].limit_nonzero);
  CHECK(rows[0].ratio == make_rational(rows[0].sigma, rows[0].dim));
  CHECK(rows[1].n == 13);
}

TEST_CASE("admissible matrix sweep") {
  std::vector<SweepRow> rows = condition_h_sweep(20);
  CHECK(rows.size() == 42);
  CHECK(std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.ok; }));

  CHECK(rows[0].b == 0);
  CHECK(rows[0].d == 1);
  CHECK(rows[0].a == 1);
  CHECK(rows[0].c == 2);

  bool found = false;
  for (const SweepRow& r : rows)
    if (r.b == 2 && r.d == 3) {
      found = true;
      CHECK(r.a == 3);
      CHECK(r.c == 4);
    }
  CHECK(found);

  // determinant and parity invariants on every row
  for (const SweepRow& r : rows) {
    CHECK(r.a * r.d - r.b * r.c == 1);
    CHECK(r.a % 2 == 1);
    CHECK(r.d % 2 == 1);
    CHECK(r.b % 2 == 0);
    CHECK(r.c % 2 == 0);
    CHECK(r.c > 0);
    CHECK(r.b >= 0);
    CHECK(r.b < r.d);
  }

  // threads only change the schedule, never the rows
  std::vector<SweepRow> par = condition_h_sweep(20, 4);
  REQUIRE(par.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(par[i].b == rows[i].b);
    CHECK(par[i].d == rows[i].d);
    CHECK(par[i].a == rows[i].a);
    CHECK(par[i].c == rows[i].c);
    CHECK(par[i].ok == rows[i].ok);
  }
}
