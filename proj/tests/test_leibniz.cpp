#include <doctest.h>

#include "ptl/leibniz.hpp"
#include "test_util.hpp"

using namespace ptl;
using testutil::q;

TEST_CASE("check_leibniz verdicts") {
  Field Q = Field::rationals();
  // abelian passes
  CHECK(check_leibniz(MultiMap(2, 3, 3, Q)).ok);
  // the dim-2 nilpotent algebra passes
  auto alg = testutil::nilpotent2(Q);
  auto rep = check_leibniz(alg.bracket);
  CHECK(rep.ok);
  CHECK(rep.mc_zero);
  // dim 1 with [e,e] = e fails with residual -e on (e,e,e)
  MultiMap bad(2, 1, 1, Q);
  std::array<int, 2> i00{0, 0};
  bad.set_coeff(0, i00, q(1));
  auto r2 = check_leibniz(bad);
  CHECK_FALSE(r2.ok);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0].triple == std::array<int, 3>{0, 0, 0});
  CHECK(r2.violations[0].residual[0] == q(-1));
  CHECK_FALSE(r2.mc_zero);
}

TEST_CASE("check_leibniz agrees with the Maurer-Cartan characterization away from char 2") {
  for (long long p : {0LL, 3LL, 5LL}) {
    Field f = (p == 0) ? Field::rationals() : Field::prime(p);
    testutil::ScalarGen gen(f, 1234);
    for (int trial = 0; trial < 60; ++trial) {
      int dim = gen.uniform(1, 2);
      MultiMap b = gen.multimap(2, dim, dim);
      auto rep = check_leibniz(b);
      CHECK(rep.ok == rep.mc_zero);
    }
  }
}

TEST_CASE("adjoint and coadjoint representations") {
  Field Q = Field::rationals();
  auto alg = testutil::nilpotent2(Q);
  auto ad = adjoint_rep(alg);
  CHECK(check_representation(alg, ad).ok);
  auto coad = coadjoint_rep(alg);
  CHECK(check_representation(alg, coad).ok);

  // ad^L(e1, e1) = e2
  Vec e1{q(1), q(0)};
  Vec v = ad.rho_l.eval(e1, e1);
  CHECK(v[0].is_zero());
  CHECK(v[1] == q(1));

  // coad^R(alpha, x)(y) = alpha([x,y] + [y,x]): 2e2 pairs only with e2*,
  // so coad^R(e2*, e1) = 2 e1* and coad^R(e1*, e1) = 0
  Vec e2star{q(0), q(1)}, e1star{q(1), q(0)};
  Vec w = coad.rho_r.eval(e2star, e1);
  CHECK(w[0] == q(2));
  CHECK(w[1].is_zero());
  CHECK(is_zero_vec(coad.rho_r.eval(e1star, e1)));
  // coad^L(e1, e2*) = -e1*
  Vec u = coad.rho_l.eval(e1, e2star);
  CHECK(u[0] == q(-1));
  CHECK(u[1].is_zero());

  // abelian algebra has zero adjoint and coadjoint actions
  auto ab = LeibnizAlgebra::abelian(3, Q);
  CHECK(adjoint_rep(ab).rho_l.is_zero());
  CHECK(coadjoint_rep(ab).rho_r.is_zero());

  // zero actions form a representation of anything
  CHECK(check_representation(alg, Representation::zero(2, 3, Q)).ok);
}

TEST_CASE("lp_coboundary on the dim-2 algebra with the adjoint representation") {
  Field Q = Field::rationals();
  auto alg = testutil::nilpotent2(Q);
  auto ad = adjoint_rep(alg);

  // n = 1, f = id: (delta f)(x,y) = [x,y]; at (e1,e1) this is e2
  MultiMap id = MultiMap::identity(2, Q);
  MultiMap df = lp_coboundary(id, alg, ad);
  std::array<int, 2> i00{0, 0};
  CHECK(df.coeff(0, i00).is_zero());
  CHECK(df.coeff(1, i00) == q(1));
  CHECK(df == alg.bracket);

  // everything vanishes over an abelian algebra with zero actions
  auto ab = LeibnizAlgebra::abelian(2, Q);
  auto zero_rep = Representation::zero(2, 2, Q);
  testutil::ScalarGen gen(Q, 5);
  CHECK(lp_coboundary(gen.multimap(2, 2, 2), ab, zero_rep).is_zero());
}

TEST_CASE("delta squared vanishes, including the degree-0 convention") {
  for (long long p : {0LL, 5LL}) {
    Field f = (p == 0) ? Field::rationals() : Field::prime(p);
    for (const auto& alg : {testutil::nilpotent2(f), testutil::nilpotent3(f)}) {
      for (const auto& rep : {adjoint_rep(alg), coadjoint_rep(alg),
                              Representation::zero(alg.dim, 2, f)}) {
        REQUIRE(check_representation(alg, rep).ok);
        testutil::ScalarGen gen(f, 17);
        // n = 0 -> 1 -> 2
        Vec v = zero_vec(rep.carrier_dim, f);
        for (auto& s : v) s = gen.next();
        CHECK(lp_coboundary(lp_coboundary0(v, alg, rep), alg, rep).is_zero());
        for (int n = 1; n <= 2; ++n) {
          MultiMap c = gen.multimap(n, alg.dim, rep.carrier_dim);
          CHECK(lp_coboundary(lp_coboundary(c, alg, rep), alg, rep).is_zero());
        }
      }
    }
  }
}

TEST_CASE("cohomology dimensions") {
  Field Q = Field::rationals();

  // abelian with zero actions: dim H^n = v * g^n
  auto ab = LeibnizAlgebra::abelian(2, Q);
  auto rows = cohomology_dimensions(ab, Representation::zero(2, 3, Q), 3);
  for (const auto& row : rows) {
    int expect = 3;
    for (int i = 0; i < row.n; ++i) expect *= 2;
    CHECK(row.cohomology == expect);
    CHECK(row.cocycles - row.coboundaries == row.cohomology);
  }

  // any algebra with the zero representation: H^0 = V
  auto alg = testutil::nilpotent2(Q);
  auto rows0 = cohomology_dimensions(alg, Representation::zero(2, 3, Q), 0);
  CHECK(rows0[0].cohomology == 3);

  // rank-nullity bookkeeping: dim Z^n + rank delta^n = dim C^n
  auto ad = adjoint_rep(alg);
  auto rows2 = cohomology_dimensions(alg, ad, 2);
  // frozen: H^0 of the dim-2 algebra with the adjoint representation is the
  // right annihilator {v : [v,x] = 0} = span(e2)
  CHECK(rows2[0].cohomology == 1);
  for (const auto& row : rows2) {
    Matrix d = coboundary_matrix(alg, ad, row.n);
    CHECK(row.cocycles + rank(d) == row.cochain_dim);
  }
  CHECK_THROWS_AS((void)cohomology_dimensions(alg, ad, 6), Error);
}
