#include <doctest.h>

#include "ptl/commands.hpp"
#include "ptl/zoo.hpp"
#include "test_util.hpp"

using namespace ptl;
using testutil::q;

namespace {

const std::vector<ExampleKind> kAllKinds = {
    ExampleKind::DirectProduct,    ExampleKind::Semidirect,   ExampleKind::DerivationHost,
    ExampleKind::Weight1Semidirect, ExampleKind::CrossedHomHost, ExampleKind::Modified,
    ExampleKind::ThetaTwisted,     ExampleKind::Reynolds,     ExampleKind::HemiSemidirect,
    ExampleKind::MatchedPair,      ExampleKind::RMatrixHost};

}  // namespace

TEST_CASE("every builder output passes check_proto_twilled with the right flags") {
  for (long long p : {0LL, 2LL, 5LL}) {
    Field f = (p == 0) ? Field::rationals() : Field::prime(p);
    for (ExampleKind kind : kAllKinds) {
      AlgebraDocument doc = zoo_preset_document(kind, f);
      auto rep = check_proto_twilled(doc.omega);
      CHECK(rep.leibniz_ok);
      for (const auto& eq : rep.equations) CHECK(eq.ok);
      switch (kind) {
        case ExampleKind::DirectProduct:
        case ExampleKind::MatchedPair:
          CHECK(rep.twilled);
          break;
        case ExampleKind::Semidirect:
        case ExampleKind::Weight1Semidirect:
        case ExampleKind::HemiSemidirect:
          CHECK(rep.quasi_twilled);
          break;
        case ExampleKind::ThetaTwisted:
        case ExampleKind::Reynolds:
          CHECK(rep.quasi_twilled);
          CHECK_FALSE(rep.twilled);
          break;
        case ExampleKind::Modified:
          CHECK_FALSE(rep.quasi_twilled);  // eta = [.,.]_g is alive
          break;
        default: break;
      }
    }
  }
}

TEST_CASE("builder validation failures name the violated hypothesis") {
  Field Q = Field::rationals();
  // a non-Leibniz base algebra
  MultiMap bad(2, 1, 1, Q);
  std::array<int, 2> i00{0, 0};
  bad.set_coeff(0, i00, q(1));
  ExampleInputs in{LeibnizAlgebra{1, bad}};
  CHECK_THROWS_WITH_AS((void)build(ExampleKind::Modified, in),
                       doctest::Contains("Leibniz identity"), Error);

  // a hemi host needs an antisymmetric bracket
  ExampleInputs hemi_in{testutil::nilpotent2(Q)};
  hemi_in.lie_action = Bilinear::zero(2, 1, 1, Q);
  CHECK_THROWS_WITH_AS((void)build(ExampleKind::HemiSemidirect, hemi_in),
                       doctest::Contains("antisymmetric"), Error);

  // a twisted host needs a genuine cocycle
  ExampleInputs tw{testutil::nilpotent2(Q)};
  tw.rep = Representation::zero(2, 1, Q);
  MultiMap notco(2, 2, 1, Q);
  std::array<int, 2> i10{1, 0};
  notco.set_coeff(0, i10, q(1));
  tw.theta = notco;
  CHECK_THROWS_WITH_AS((void)build(ExampleKind::ThetaTwisted, tw),
                       doctest::Contains("2-cocycle"), Error);

  // weight-1 compatibilities are enforced
  ExampleInputs w1{testutil::nilpotent2(Q)};
  w1.h = testutil::nilpotent2(Q);
  Representation rep = Representation::zero(2, 2, Q);
  rep.rho_l.at(0, 0, 0) = q(1);  // rho^L(e1, u1) = u1 is not a derivation of [u1,u1]=u2
  w1.rep = rep;
  CHECK_THROWS_AS((void)build(ExampleKind::Weight1Semidirect, w1), Error);
}

TEST_CASE("classify spot checks") {
  Field Q = Field::rationals();

  // identity on the direct product of an algebra with itself is a homomorphism
  AlgebraDocument dir = zoo_preset_document(ExampleKind::DirectProduct, Q);
  ExampleInputs din = extract_example_inputs(ExampleKind::DirectProduct, dir);
  CHECK(classify(ExampleKind::DirectProduct, din, Matrix::identity(2, Q)));

  // r = 0 is a modified Rota-Baxter operator only for abelian brackets
  AlgebraDocument mod = zoo_preset_document(ExampleKind::Modified, Q);
  ExampleInputs min = extract_example_inputs(ExampleKind::Modified, mod);
  CHECK_FALSE(classify(ExampleKind::Modified, min, Matrix(2, 2, Q)));
  CHECK(classify(ExampleKind::Modified, min, Matrix::identity(2, Q)));

  // r = 0 is a Reynolds operator (both sides vanish)
  AlgebraDocument rey = zoo_preset_document(ExampleKind::Reynolds, Q);
  ExampleInputs rin = extract_example_inputs(ExampleKind::Reynolds, rey);
  CHECK(classify(ExampleKind::Reynolds, rin, Matrix(2, 2, Q)));
}

TEST_CASE("classify agrees with is_deformation_map exhaustively over F2 and F3") {
  for (long long p : {2LL, 3LL}) {
    Field f = Field::prime(p);
    for (ExampleKind kind : kAllKinds) {
      AlgebraDocument doc = zoo_preset_document(kind, f);
      ExampleInputs in = extract_example_inputs(kind, doc);
      auto rep = equivalence_check_exhaustive(kind, in, 1000000);
      CHECK(rep.ok);
      CHECK(rep.divergences.empty());
      CHECK(rep.tested >= 2);
    }
  }
}

TEST_CASE("classify agrees with is_deformation_map on rational samples") {
  Field Q = Field::rationals();
  for (ExampleKind kind : kAllKinds) {
    AlgebraDocument doc = zoo_preset_document(kind, Q);
    ExampleInputs in = extract_example_inputs(kind, doc);
    std::vector<Matrix> samples;
    for (const auto& [name, m] : doc.linear_maps) samples.push_back(m);
    testutil::ScalarGen gen(Q, 404);
    for (int t = 0; t < 10; ++t) samples.push_back(gen.matrix(doc.dim_g, doc.dim_h));
    auto rep = equivalence_check(kind, in, samples);
    CHECK(rep.ok);
    CHECK(rep.deformation_maps >= 1);  // every preset carries a valid operator
  }
}

TEST_CASE("enumerate_deformation_maps") {
  // dim-2/dim-1 semidirect over F2: exactly the maps with vanishing e1 part
  Field f2 = Field::prime(2);
  auto semi = zoo_preset_document(ExampleKind::Semidirect, f2).omega;
  auto maps = enumerate_deformation_maps(semi);
  CHECK(maps.size() == 2);
  for (const auto& m : maps) CHECK(m.at(0, 0).residue() == 0);

  // fully-zero structure: all p^{g h} maps qualify
  SplitSpace sp{2, 1, Field::prime(3)};
  auto zero_om = OmegaStructure::zero(sp);
  CHECK(enumerate_deformation_maps(zero_om).size() == 9);

  // eta != 0 excludes r = 0
  auto mod = zoo_preset_document(ExampleKind::Modified, f2).omega;
  for (const auto& m : enumerate_deformation_maps(mod)) CHECK_FALSE(m.is_zero());

  // the count is invariant under relabeling the h basis (dim_h = 1 is trivial,
  // so use the modified host where dim_h = 2)
  {
    Field f3 = Field::prime(3);
    auto om = zoo_preset_document(ExampleKind::Modified, f3).omega;
    auto base = enumerate_deformation_maps(om);
    // conjugating candidates by the swap permutation of h reproduces the count
    std::size_t swapped_count = 0;
    long total = deformation_scan_size(om);
    for (long t = 0; t < total; ++t) {
      Matrix r(2, 2, f3);
      long v = t;
      for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i) {
          r.set(i, j, FieldScalar::of(f3, v % 3));
          v /= 3;
        }
      Matrix rs(2, 2, f3);  // r composed with the swap of the h basis
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rs.set(i, j, r.at(i, 1 - j));
      if (is_deformation_map(rs, om).is_deformation) ++swapped_count;
    }
    CHECK(swapped_count == base.size());
  }

  // budget enforcement and field checks
  CHECK_THROWS_AS((void)enumerate_deformation_maps(semi, 2), Error);
  auto rational = zoo_preset_document(ExampleKind::Semidirect, Field::rationals()).omega;
  CHECK_THROWS_AS((void)enumerate_deformation_maps(rational), Error);
}

TEST_CASE("r-matrix host") {
  Field Q = Field::rationals();
  auto alg = testutil::nilpotent2(Q);

  // s = 0 is an r-matrix for the (quasi-twilled) coadjoint host
  auto res0 = r_matrix_host(alg, Matrix(2, 2, Q));
  CHECK(res0.is_r_matrix);

  // s = e2 (x) e2 is an r-matrix; s = e1 (x) e1 is not
  Matrix s_ok(2, 2, Q);
  s_ok.set(1, 1, q(1));
  CHECK(r_matrix_host(alg, s_ok).is_r_matrix);
  Matrix s_bad(2, 2, Q);
  s_bad.set(0, 0, q(1));
  CHECK_FALSE(r_matrix_host(alg, s_bad).is_r_matrix);

  // brute-force confirmation of both verdicts from the defining identity
  Representation coad = coadjoint_rep(alg);
  auto verify = [&](const Matrix& s) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Vec alpha = zero_vec(2, Q), beta = zero_vec(2, Q);
        alpha[a] = q(1);
        beta[b] = q(1);
        Vec sa = s.apply(alpha), sb = s.apply(beta);
        Vec lhs = alg.bracket.eval({sa, sb});
        Vec inner = coad.rho_l.eval(sa, beta);
        Vec t = coad.rho_r.eval(alpha, sb);
        for (int j = 0; j < 2; ++j) inner[j] += t[j];
        Vec rhs = s.apply(inner);
        for (int j = 0; j < 2; ++j)
          if (!(lhs[j] - rhs[j]).is_zero()) return false;
      }
    return true;
  };
  CHECK(verify(s_ok));
  CHECK_FALSE(verify(s_bad));

  // any s on an abelian algebra works; asymmetric s is rejected
  auto ab = LeibnizAlgebra::abelian(2, Q);
  testutil::ScalarGen gen(Q, 7);
  Matrix s = gen.matrix(2, 2);
  Matrix sym(2, 2, Q);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sym.set(i, j, s.at(i, j) + s.at(j, i));
  CHECK(r_matrix_host(ab, sym).is_r_matrix);
  Matrix asym(2, 2, Q);
  asym.set(0, 1, q(1));
  CHECK_THROWS_AS((void)r_matrix_host(alg, asym), Error);
}

TEST_CASE("hemi-semidirect edge case: abelian Lie algebra with zero action") {
  Field Q = Field::rationals();
  ExampleInputs in{LeibnizAlgebra::abelian(2, Q)};
  in.lie_action = Bilinear::zero(2, 1, 1, Q);
  OmegaStructure om = build(ExampleKind::HemiSemidirect, in);
  CHECK(om.omega.is_zero());
}
