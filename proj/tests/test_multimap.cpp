#include <doctest.h>

#include <algorithm>

#include "ptl/multimap.hpp"
#include "test_util.hpp"

using namespace ptl;
using testutil::q;

namespace {

// Independent oracle for the insertion product: enumerate full permutations,
// keep the shuffles by filtering, and compute everything through vector
// evaluation instead of structure-constant contraction.
MultiMap diamond_bruteforce(const MultiMap& f, const MultiMap& g) {
  const int N = f.domain_dim();
  const int m = f.arity(), n = g.arity(), M = m + n - 1;
  const Field& fld = f.field();
  MultiMap out(M, N, N, fld);
  auto basis = [&](int i) {
    Vec v = zero_vec(N, fld);
    v[i] = FieldScalar::one(fld);
    return v;
  };
  for_each_index(M, N, [&](const std::vector<int>& idx) {
    Vec acc = zero_vec(N, fld);
    for (int i = 1; i <= m; ++i) {
      const int p = i - 1, q_ = n - 1;
      std::vector<int> perm(static_cast<std::size_t>(p + q_));
      for (int t = 0; t < p + q_; ++t) perm[t] = t;
      do {
        bool inc = std::is_sorted(perm.begin(), perm.begin() + p) &&
                   std::is_sorted(perm.begin() + p, perm.end());
        if (!inc) continue;
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
          for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
        long sign = ((static_cast<long>(i - 1) * (n - 1) + inv) % 2 == 0) ? 1 : -1;
        std::vector<Vec> gargs;
        for (int t = p; t < p + q_; ++t) gargs.push_back(basis(idx[perm[t]]));
        gargs.push_back(basis(idx[p + q_]));
        Vec gval = g.eval(gargs);
        std::vector<Vec> fargs;
        for (int t = 0; t < p; ++t) fargs.push_back(basis(idx[perm[t]]));
        fargs.push_back(gval);
        for (int t = p + q_ + 1; t < M; ++t) fargs.push_back(basis(idx[t]));
        Vec fval = f.eval(fargs);
        for (int j = 0; j < N; ++j)
          acc[j] += (sign > 0) ? fval[j] : -fval[j];
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (int j = 0; j < N; ++j)
      if (!acc[j].is_zero()) out.set_coeff(j, idx, acc[j]);
  });
  return out;
}

MultiMap jacobiator(const MultiMap& f, const MultiMap& g, const MultiMap& h) {
  auto sgn = [](long e) { return e % 2 == 0 ? 1 : -1; };
  const long m = f.arity() - 1, n = g.arity() - 1, p = h.arity() - 1;
  MultiMap t1 = balavoine_bracket(balavoine_bracket(f, g), h);
  MultiMap t2 = balavoine_bracket(balavoine_bracket(g, h), f);
  MultiMap t3 = balavoine_bracket(balavoine_bracket(h, f), g);
  const Field& fld = f.field();
  return t1.scaled(FieldScalar::of(fld, sgn(m * p))) +
         t2.scaled(FieldScalar::of(fld, sgn(n * m))) +
         t3.scaled(FieldScalar::of(fld, sgn(p * n)));
}

}  // namespace

TEST_CASE("eval basics") {
  Field Q = Field::rationals();
  MultiMap id = MultiMap::identity(3, Q);
  Vec v{q(1), q(-2), q(5, 2)};
  CHECK(id.eval({v}) == v);

  MultiMap zero(2, 3, 3, Q);
  CHECK(is_zero_vec(zero.eval({v, v})));

  // bracket of the 2-dim algebra on (e1, e1) gives e2
  auto alg = testutil::nilpotent2(Q);
  Vec e1{q(1), q(0)};
  Vec out = alg.bracket.eval({e1, e1});
  CHECK(out[0].is_zero());
  CHECK(out[1] == q(1));

  CHECK_THROWS_AS((void)id.eval({v, v}), Error);
}

TEST_CASE("diamond composition and identity laws") {
  Field Q = Field::rationals();
  testutil::ScalarGen gen(Q, 7);
  MultiMap f = gen.multimap(1, 3, 3);
  MultiMap g = gen.multimap(1, 3, 3);
  // arity 1: f <> g is plain composition
  MultiMap fg = diamond(f, g);
  for (int i = 0; i < 3; ++i) {
    Vec e = zero_vec(3, Q);
    e[i] = FieldScalar::one(Q);
    CHECK(fg.eval({e}) == f.eval({g.eval({e})}));
  }
  // f <> id = m f for an arity-m map
  MultiMap h = gen.multimap(2, 3, 3);
  MultiMap id = MultiMap::identity(3, Q);
  CHECK(diamond(h, id) == h.scaled(q(2)));
  MultiMap h3 = gen.multimap(3, 2, 2);
  MultiMap id2 = MultiMap::identity(2, Q);
  CHECK(diamond(h3, id2) == h3.scaled(q(3)));
  // zero absorbs
  MultiMap zero(2, 3, 3, Q);
  CHECK(diamond(zero, g).is_zero());
}

TEST_CASE("diamond matches the permutation-filter oracle") {
  for (long long p : {5LL, 0LL}) {
    Field f = (p == 0) ? Field::rationals() : Field::prime(p);
    testutil::ScalarGen gen(f, 11);
    for (int trial = 0; trial < 12; ++trial) {
      int dim = gen.uniform(1, 2);
      int m = gen.uniform(1, 3), n = gen.uniform(1, 3);
      MultiMap a = gen.multimap(m, dim, dim);
      MultiMap b = gen.multimap(n, dim, dim);
      CHECK(diamond(a, b) == diamond_bruteforce(a, b));
    }
  }
}

TEST_CASE("balavoine bracket of the nilpotent bracket with itself vanishes") {
  Field Q = Field::rationals();
  auto alg = testutil::nilpotent2(Q);
  CHECK(balavoine_bracket(alg.bracket, alg.bracket).is_zero());
  // self-bracket of an arity-1 map: f o f - f o f = 0
  testutil::ScalarGen gen(Q, 3);
  MultiMap f = gen.multimap(1, 3, 3);
  CHECK(balavoine_bracket(f, f).is_zero());
}

TEST_CASE("graded antisymmetry and graded Jacobi over F5") {
  Field f5 = Field::prime(5);
  testutil::ScalarGen gen(f5, 23);
  for (int trial = 0; trial < 10; ++trial) {
    int dim = gen.uniform(2, 3);
    int m = gen.uniform(1, 3), n = gen.uniform(1, 3), p = gen.uniform(1, 2);
    MultiMap f = gen.multimap(m, dim, dim);
    MultiMap g = gen.multimap(n, dim, dim);
    MultiMap h = gen.multimap(p, dim, dim);
    long e = static_cast<long>(m - 1) * (n - 1);
    MultiMap anti = balavoine_bracket(f, g) +
                    balavoine_bracket(g, f).scaled(FieldScalar::of(f5, e % 2 == 0 ? 1 : -1));
    CHECK(anti.is_zero());
    CHECK(jacobiator(f, g, h).is_zero());
  }
}

TEST_CASE("arity cap applies to operation inputs") {
  Field Q = Field::rationals();
  MultiMap big(7, 1, 1, Q);
  MultiMap small(1, 1, 1, Q);
  CHECK_THROWS_AS((void)diamond(big, small), Error);
  // but results may exceed the cap: (4,4) -> arity 7
  testutil::ScalarGen gen(Q, 5);
  MultiMap a = gen.multimap(4, 1, 1);
  CHECK(diamond(a, a).arity() == 7);
}

TEST_CASE("bidegree detection") {
  Field Q = Field::rationals();
  SplitSpace sp{2, 1, Q};
  testutil::ScalarGen gen(Q, 9);

  // a lifted element of Hom(h^{n+1}, g) has bidegree -1|n+1
  for (int n = 0; n <= 2; ++n) {
    MultiMap f = gen.multimap(n + 1, 1, 2);
    MultiMap lifted = lift_a_element(f, sp);
    auto bd = bidegree_of(lifted, sp);
    REQUIRE(bd.has_value());
    CHECK(bd->k == -1);
    CHECK(bd->l == n + 1);
  }

  // the mu of a semidirect-type structure has bidegree 1|0
  MultiMap mu(2, 3, 3, Q);
  std::array<int, 2> i00{0, 0}, i02{0, 2};
  mu.set_coeff(1, i00, q(1));  // g (x) g -> g
  mu.set_coeff(2, i02, q(1));  // g (x) h -> h
  auto bd = bidegree_of(mu, sp);
  REQUIRE(bd.has_value());
  CHECK(bd->k == 1);
  CHECK(bd->l == 0);

  // generic maps mix components
  MultiMap mixed = gen.multimap(2, 3, 3);
  CHECK_FALSE(bidegree_of(mixed, sp).has_value());
}

TEST_CASE("bidegree decomposition sums back and splits arity-2 maps in four") {
  Field f3 = Field::prime(3);
  SplitSpace sp{2, 2, f3};
  testutil::ScalarGen gen(f3, 31);
  for (int arity = 1; arity <= 4; ++arity) {
    MultiMap f = gen.multimap(arity, 4, 4);
    auto comps = bidegree_decompose(f, sp);
    CHECK(static_cast<int>(comps.size()) == arity + 2);
    MultiMap sum(arity, 4, 4, f3);
    for (const auto& [kl, comp] : comps) {
      sum += comp;
      if (!comp.is_zero()) CHECK(has_bidegree(comp, sp, kl));
    }
    CHECK(sum == f);
  }
  // pure input: exactly one nonzero component, equal to the input
  MultiMap pure = gen.pure_bidegree(sp, 2, 0);
  auto comps = bidegree_decompose(pure, sp);
  int nonzero = 0;
  for (const auto& [kl, comp] : comps)
    if (!comp.is_zero()) {
      ++nonzero;
      CHECK(comp == pure);
      CHECK(kl.k == 0);
    }
  CHECK(nonzero == 1);
  // zero map: all components zero
  for (const auto& [kl, comp] : bidegree_decompose(MultiMap(2, 4, 4, f3), sp))
    CHECK(comp.is_zero());
}

TEST_CASE("bidegree additivity of the bracket and abelian a") {
  Field f5 = Field::prime(5);
  SplitSpace sp{2, 1, f5};
  testutil::ScalarGen gen(f5, 77);
  for (int trial = 0; trial < 40; ++trial) {
    int am = gen.uniform(1, 3), an = gen.uniform(1, 3);
    int kf = gen.uniform(-1, am), kg = gen.uniform(-1, an);
    MultiMap f = gen.pure_bidegree(sp, am, kf);
    MultiMap g = gen.pure_bidegree(sp, an, kg);
    MultiMap br = balavoine_bracket(f, g);
    int lf = am - 1 - kf, lg = an - 1 - kg;
    if (kf + kg < -1 || lf + lg < -1)
      CHECK(br.is_zero());  // no admissible cells below bidegree -1
    else
      CHECK(has_bidegree(br, sp, Bidegree{kf + kg, lf + lg}));
  }
  // two elements of a always bracket to zero
  for (int trial = 0; trial < 10; ++trial) {
    MultiMap f = lift_a_element(gen.multimap(gen.uniform(1, 3), 1, 2), sp);
    MultiMap g = lift_a_element(gen.multimap(gen.uniform(1, 3), 1, 2), sp);
    CHECK(balavoine_bracket(f, g).is_zero());
  }
}

TEST_CASE("horizontal lift and restriction") {
  Field Q = Field::rationals();
  SplitSpace sp{2, 1, Q};

  // r : h -> g lifts to r~(x,u) = (r(u), 0)
  Matrix r = Matrix::from_strings(Q, {{"3"}, {"-1"}});
  MultiMap rt = lift_linear(r, sp);
  Vec v{q(7), q(2), q(5)};  // (x, u) with x = (7,2), u = 5
  Vec out = rt.eval({v});
  CHECK(out[0] == q(15));
  CHECK(out[1] == q(-5));
  CHECK(out[2].is_zero());

  // zero block map lifts to zero
  CHECK(horizontal_lift(BlockMap::zero(sp, 1, 1, false)).is_zero());

  // lift-then-restrict on a random theta : g x g -> h
  testutil::ScalarGen gen(Q, 13);
  BlockMap bm = BlockMap::zero(sp, 2, 0, false);
  for (auto& c : bm.blocks[0]) c = gen.next();
  MultiMap lifted = horizontal_lift(bm);
  BlockMap back = restrict_blocks(lifted, sp, 2, 0, false);
  CHECK(back.blocks == bm.blocks);
  auto bd = bidegree_of(lifted, sp);
  REQUIRE(bd.has_value());
  CHECK(bd->k == 2);
  CHECK(bd->l == -1);

  // inconsistent block shapes are rejected
  BlockMap bad = BlockMap::zero(sp, 1, 1, true);
  bad.blocks.pop_back();
  CHECK_THROWS_AS((void)horizontal_lift(bad), Error);
}

TEST_CASE("subalgebra closure under the bracket") {
  Field f5 = Field::prime(5);
  SplitSpace sp{2, 1, f5};
  testutil::ScalarGen gen(f5, 99);
  auto member = [&](const MultiMap& f, auto admit) {
    for (const auto& [kl, comp] : bidegree_decompose(f, sp))
      if (!comp.is_zero() && !admit(kl)) return false;
    return true;
  };
  auto in_m = [](Bidegree kl) { return kl.k >= 0 && kl.l >= 0; };  // M_n = C^{n|0}+...+C^{0|n}
  auto in_q = [](Bidegree kl) { return kl.k >= 0; };               // Q_n = C^{n+1|-1} + M_n
  auto in_r = [](Bidegree kl) { return kl.l >= 0; };               // R_n = M_n + C^{-1|n+1}
  for (int trial = 0; trial < 25; ++trial) {
    int am = gen.uniform(1, 3), an = gen.uniform(1, 3);
    // M: both indices nonnegative
    MultiMap fm = gen.pure_bidegree(sp, am, gen.uniform(0, am - 1));
    MultiMap gm = gen.pure_bidegree(sp, an, gen.uniform(0, an - 1));
    CHECK(member(balavoine_bracket(fm, gm), in_m));
    // Q: k >= 0 (l = -1 allowed)
    MultiMap fq = gen.pure_bidegree(sp, am, gen.uniform(0, am));
    MultiMap gq = gen.pure_bidegree(sp, an, gen.uniform(0, an));
    CHECK(member(balavoine_bracket(fq, gq), in_q));
    // R: l >= 0 (k = -1 allowed)
    MultiMap fr = gen.pure_bidegree(sp, am, gen.uniform(-1, am - 1));
    MultiMap gr = gen.pure_bidegree(sp, an, gen.uniform(-1, an - 1));
    CHECK(member(balavoine_bracket(fr, gr), in_r));
  }
}
