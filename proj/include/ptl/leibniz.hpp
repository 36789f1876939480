#pragma once

#include <array>
#include <string>
#include <vector>

#include "ptl/multimap.hpp"

namespace ptl {

/// A Leibniz algebra presented by structure constants. Constructors store
/// the data unvalidated; check_leibniz is the explicit diagnostic, so the
/// CLI can load and report on broken inputs.
struct LeibnizAlgebra {
  int dim = 0;
  MultiMap bracket;  // arity 2, dim -> dim

  static LeibnizAlgebra abelian(int dim, const Field& f) {
    return LeibnizAlgebra{dim, MultiMap(2, dim, dim, f)};
  }
};

/// A representation (V, rho^L, rho^R) of a Leibniz algebra.
struct Representation {
  int carrier_dim = 0;
  Bilinear rho_l;  // g x V -> V
  Bilinear rho_r;  // V x g -> V

  static Representation zero(int algebra_dim, int carrier_dim, const Field& f) {
    return Representation{carrier_dim, Bilinear::zero(algebra_dim, carrier_dim, carrier_dim, f),
                          Bilinear::zero(carrier_dim, algebra_dim, carrier_dim, f)};
  }
};

struct TripleViolation {
  std::array<int, 3> triple;
  Vec residual;
};

struct LeibnizCheckReport {
  bool ok = false;  // the identity holds on all basis triples
  std::vector<TripleViolation> violations;
  MultiMap mc_tensor;    // [[Omega, Omega]], computed independently
  bool mc_zero = false;  // equals `ok` whenever char != 2
};

/// Checks [x,[y,z]] = [[x,y],z] + [y,[x,z]] on all basis triples and also
/// computes [[Omega,Omega]]. Residuals are left side minus right side.
LeibnizCheckReport check_leibniz(const MultiMap& bracket);

struct RepresentationCheckReport {
  bool ok = false;
  // one violation list per defining identity, in the order they are stated
  std::array<std::vector<TripleViolation>, 3> violations;
};

RepresentationCheckReport check_representation(const LeibnizAlgebra& alg, const Representation& rep);

Representation adjoint_rep(const LeibnizAlgebra& alg);

/// Coadjoint representation on g^*:
///   coad^L(x, alpha)(y) = -alpha([x,y]),
///   coad^R(alpha, x)(y) = alpha([x,y] + [y,x]).
Representation coadjoint_rep(const LeibnizAlgebra& alg);

/// The Loday-Pirashvili coboundary for n >= 1 cochains f : g^{tensor n} -> V.
MultiMap lp_coboundary(const MultiMap& f, const LeibnizAlgebra& alg, const Representation& rep);

/// Degree-0 case: a 0-cochain is a vector v in V and
/// (delta v)(x) = -rho^R(v, x), the n = 0 specialization of the displayed
/// alternating-sum formula (the i-sums are empty and the rho^R term keeps its
/// (-1)^{n+1} sign). This is the unique linear-in-rho convention with
/// delta(delta(v)) = 0 for every valid representation.
MultiMap lp_coboundary0(const Vec& v, const LeibnizAlgebra& alg, const Representation& rep);

struct CohomologyRow {
  int n = 0;
  int cochain_dim = 0;
  int cocycles = 0;     // dim Z^n
  int coboundaries = 0; // dim B^n
  int cohomology = 0;   // dim H^n
};

/// Exact dimensions of Z^n, B^n, H^n for n = 0..N via rank/kernel of the
/// coboundary matrices on the standard cochain basis (input multi-indices in
/// lexicographic order, then the output index).
std::vector<CohomologyRow> cohomology_dimensions(const LeibnizAlgebra& alg, const Representation& rep,
                                                 int N);

/// Matrix of delta^n : C^n -> C^{n+1} in the standard cochain basis.
/// Exposed for the oracle-style tests.
Matrix coboundary_matrix(const LeibnizAlgebra& alg, const Representation& rep, int n);

/// Position of a cochain basis element (multi-index I lexicographic, then
/// output index) and total dimension of C^n.
std::size_t cochain_dim(int algebra_dim, int carrier_dim, int n);
Vec cochain_to_vec(const MultiMap& f);

}  // namespace ptl
