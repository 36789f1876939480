#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptl/prototwilled.hpp"

namespace ptl {

/// The worked example families: each builds a proto-twilled structure whose
/// deformation maps are exactly the operators of the corresponding classical
/// definition.
enum class ExampleKind {
  DirectProduct,      // r a Leibniz algebra homomorphism h -> g
  Semidirect,         // r a relative Rota-Baxter operator of weight 0
  DerivationHost,     // r a derivation g -> V (host splits as V (+) g)
  Weight1Semidirect,  // r a relative Rota-Baxter operator of weight 1
  CrossedHomHost,     // r a crossed homomorphism (host splits as h (+) g)
  Modified,           // r a modified Rota-Baxter operator
  ThetaTwisted,       // r a theta-twisted Rota-Baxter operator
  Reynolds,           // r a Reynolds operator
  HemiSemidirect,     // r an embedding tensor (g must be a Lie algebra)
  MatchedPair,        // r a deformation map in a matched pair
  RMatrixHost,        // r = s# for a symmetric 2-tensor s (coadjoint host)
};

const char* example_kind_name(ExampleKind k);
std::optional<ExampleKind> example_kind_from_name(const std::string& name);

/// Raw materials for the builders; each kind reads the subset it needs.
struct ExampleInputs {
  LeibnizAlgebra g;                      // the primary algebra
  std::optional<LeibnizAlgebra> h;       // second algebra (direct product, weight 1, ...)
  std::optional<Representation> rep;     // representation of g
  std::optional<Bilinear> lie_action;    // hemi-semidirect: rho as g x V -> V
  std::optional<MultiMap> theta;         // twisted: a 2-cocycle g x g -> V
  // matched pair: the mixed structure maps on g (+) h
  std::optional<Bilinear> rho_l, rho_r, psi_l, psi_r;
  std::optional<Matrix> sym;             // r-matrix: symmetric coefficient matrix of s
};

/// Builds the proto-twilled structure of the given kind. Input hypotheses
/// (Leibniz identities, representation identities, cocycle conditions, the
/// weight-1 compatibilities, antisymmetry for the hemi case) are checked
/// eagerly; violations raise InvalidExampleInput naming the identity.
OmegaStructure build(ExampleKind kind, const ExampleInputs& in);

/// Evaluates the operator's own defining identity directly on basis pairs,
/// without going through the assembled structure.
bool classify(ExampleKind kind, const ExampleInputs& in, const Matrix& r);

struct EquivalenceReport {
  bool ok = false;
  long tested = 0;
  long deformation_maps = 0;
  std::vector<std::string> divergences;  // fatal: classify != is_deformation_map
};

/// Asserts classify(kind, r) == is_deformation_map(r, build(kind)) for every
/// candidate r: over F_p exhaustively when `exhaustive`, otherwise for the
/// supplied sample list.
EquivalenceReport equivalence_check(ExampleKind kind, const ExampleInputs& in,
                                    const std::vector<Matrix>& samples);
EquivalenceReport equivalence_check_exhaustive(ExampleKind kind, const ExampleInputs& in,
                                               long budget = 1000000);

/// All linear maps r over F_p passing is_deformation_map, by exhaustive scan
/// in column-major digit order (entry (i,j) of candidate t is digit i + g*j of
/// t in base p). The scan range is partitioned across parallel workers and
/// merged in order.
std::vector<Matrix> enumerate_deformation_maps(const OmegaStructure& om, long budget = 1000000);

/// Number of candidate maps the scan would enumerate (p^(dim_g * dim_h)).
long deformation_scan_size(const OmegaStructure& om, long budget = 1000000);

struct RMatrixHostResult {
  OmegaStructure omega;  // semidirect product with the coadjoint representation
  Matrix r;              // s# : g* -> g
  bool is_r_matrix;      // the weight-0 Rota-Baxter verdict for s#
};

/// Builds the coadjoint semidirect host of (A, s) and reports whether s# is a
/// deformation map there (the r-matrix criterion).
RMatrixHostResult r_matrix_host(const LeibnizAlgebra& alg, const Matrix& sym);

}  // namespace ptl
