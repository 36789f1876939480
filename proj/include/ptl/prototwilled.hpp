#pragma once

#include <string>
#include <vector>

#include "ptl/leibniz.hpp"
#include "ptl/multimap.hpp"

namespace ptl {

/// A degree-1 element Omega of Hom(G^{tensor 2}, G) on a split space,
/// carried both as its eight component maps
///   [(x,u),(y,v)] = ( [x,y]_g + psi^R(x,v) + psi^L(u,y) + eta(u,v),
///                     [u,v]_h + rho^L(x,v) + rho^R(u,y) + theta(x,y) )
/// and as the cached bidegree components theta~ + mu + nu + eta~.
/// Values are immutable after assembly.
class OmegaStructure {
 public:
  SplitSpace space;

  // the eight component maps
  MultiMap bracket_g;  // g x g -> g
  MultiMap bracket_h;  // h x h -> h
  MultiMap theta;      // g x g -> h
  MultiMap eta;        // h x h -> g
  Bilinear rho_l;      // g x h -> h
  Bilinear rho_r;      // h x g -> h
  Bilinear psi_l;      // h x g -> g
  Bilinear psi_r;      // g x h -> g

  // cached bidegree components, lifted to the total space
  MultiMap theta_tilde;  // C^{2|-1}
  MultiMap mu;           // C^{1|0}:  bracket_g + rho^L + rho^R
  MultiMap nu;           // C^{0|1}:  bracket_h + psi^L + psi^R
  MultiMap eta_tilde;    // C^{-1|2}
  MultiMap omega;        // the full bracket, theta~ + mu + nu + eta~

  static OmegaStructure zero(const SplitSpace& sp);
  static OmegaStructure assemble(const SplitSpace& sp, MultiMap bracket_g, MultiMap bracket_h,
                                 Bilinear rho_l, Bilinear rho_r, Bilinear psi_l, Bilinear psi_r,
                                 MultiMap theta, MultiMap eta);
  /// Recovers the eight maps from a square arity-2 map via the four block
  /// characterization equations, then assembles. split-then-assemble is the
  /// identity on Hom(G^{tensor 2}, G).
  static OmegaStructure from_total(const SplitSpace& sp, const MultiMap& omega);
};

struct EquationCheck {
  std::string name;
  bool ok = false;
  MultiMap residual;
};

struct ProtoCheckReport {
  bool leibniz_ok = false;  // [[Omega,Omega]] == 0, the authoritative bit
  MultiMap omega_square;
  std::vector<EquationCheck> equations;  // the five component equations
  bool quasi_twilled = false;            // eta~ == 0
  bool twilled = false;                  // eta~ == 0 and theta~ == 0
};

ProtoCheckReport check_proto_twilled(const OmegaStructure& om);

struct DeformationCheckReport {
  bool is_deformation = false;  // from the identity residual
  MultiMap residual;            // h x h -> g, LHS - RHS on basis pairs
  bool identity_ok = false;
  bool graph_ok = false;  // Gr(r) closed under Omega, computed independently
};

/// Checks the deformation-map identity for r : h -> g (a dim_g x dim_h
/// matrix) and cross-checks it against closure of the graph subspace.
DeformationCheckReport is_deformation_map(const Matrix& r, const OmegaStructure& om);

/// [u,v]_r = [u,v]_h + rho^L(r(u),v) + rho^R(u,r(v)) + theta(r(u),r(v)).
LeibnizAlgebra induced_bracket(const Matrix& r, const OmegaStructure& om);

/// psi^L_r(u,x) = psi^L(u,x) + [r(u),x]_g - r(rho^R(u,x) + theta(r(u),x)),
/// psi^R_r(x,u) = psi^R(x,u) + [x,r(u)]_g - r(rho^L(x,u) + theta(x,r(u))).
Representation induced_representation(const Matrix& r, const OmegaStructure& om);

/// Twist of Omega by an arbitrary linear map r : h -> g:
///   theta_r = theta~,
///   mu_r    = mu + [[theta~, r~]],
///   nu_r    = nu + [[mu, r~]] + 1/2 [[[[theta~, r~]], r~]],
///   eta_r   = eta~ + [[nu, r~]] + 1/2 [[[[mu, r~]], r~]]
///             + 1/6 [[[[[[theta~, r~]], r~]], r~]].
/// Rejects characteristic 2 and 3 rather than reinterpreting the rational
/// coefficients.
OmegaStructure twist_omega(const Matrix& r, const OmegaStructure& om);

/// Coboundary of the deformation map r: the Loday-Pirashvili coboundary of
/// f : h^{tensor n} -> g over the induced algebra h_r and its representation
/// on g. Requires r to be a deformation map.
MultiMap deformation_coboundary(const MultiMap& f, const Matrix& r, const OmegaStructure& om);
MultiMap deformation_coboundary0(const Vec& v, const Matrix& r, const OmegaStructure& om);

std::vector<CohomologyRow> deformation_cohomology(const Matrix& r, const OmegaStructure& om, int N);

}  // namespace ptl
