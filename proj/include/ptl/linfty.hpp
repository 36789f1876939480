#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptl/prototwilled.hpp"

namespace ptl {

/// Homogeneous element of one of the graded spaces in play:
///  - `direct`:  f in a_n = Hom(h^{tensor n+1}, g), degree n = arity - 1;
///  - `suspended`: s^{-1}F for F in B_n = Hom(G^{tensor n+1}, G),
///    degree n - 1 (the suspension drops the degree by one).
/// Pair-algebra elements may carry both parts; each part of a degree-d
/// element has the matching arity.
struct GradedElement {
  int degree = 0;
  std::optional<MultiMap> suspended;  // F, arity = degree + 2
  std::optional<MultiMap> direct;     // arity = degree + 1

  static GradedElement zero(int degree) { return GradedElement{degree, std::nullopt, std::nullopt}; }
  static GradedElement a_element(MultiMap f);          // degree = arity - 1
  static GradedElement suspended_element(MultiMap F);  // degree = arity - 2
  static GradedElement pair(MultiMap F, MultiMap f);

  bool is_zero() const;
  bool has_suspended() const { return suspended && !suspended->is_zero(); }
  bool has_direct() const { return direct && !direct->is_zero(); }
  GradedElement& operator+=(const GradedElement& o);
  GradedElement scaled(const FieldScalar& s) const;
};

enum class LInftyProvenance { Controlling, Twisted, Pair, SpecializedZoo };

/// A curved L-infinity algebra given by an explicit arity truncation K, the
/// curvature l_0 (a degree-1 element, possibly zero) and structure-map
/// evaluators l_k for 1 <= k <= K; l_k = 0 for k > K by construction.
/// Evaluators are pure closures over immutable structure data.
class CurvedLInfty {
 public:
  int truncation = 0;
  LInftyProvenance provenance = LInftyProvenance::Controlling;
  SplitSpace space;
  GradedElement curvature = GradedElement::zero(1);
  std::function<GradedElement(int, const std::vector<GradedElement>&)> evaluator;

  /// l_k on a tuple of homogeneous elements; k above the truncation gives the
  /// zero element of the appropriate degree.
  GradedElement apply(int k, const std::vector<GradedElement>& xs) const;
};

/// The controlling algebra of a proto-twilled structure on a = Hom(h^{.},g):
///   l_0 = eta, l_1(f) = [[nu,f]], l_2(f,g) = [[[[mu,f]],g]],
///   l_3(f,g,h) = [[[[[[theta~,f]],g]],h]], l_k = 0 for k >= 4.
/// Maurer-Cartan elements are exactly the deformation maps.
CurvedLInfty controlling_algebra(const OmegaStructure& om);

/// l_0 + sum_{k=1..K} (1/k!) l_k(alpha,...,alpha) for a degree-0 alpha.
GradedElement mc_defect(const CurvedLInfty& L, const GradedElement& alpha);

/// Twist by a Maurer-Cartan element: l_k^alpha(xs) =
/// sum_n (1/n!) l_{n+k}(alpha,...,alpha,xs). The result is flat.
CurvedLInfty twist(const CurvedLInfty& L, const GradedElement& alpha);

/// The governing algebra of a deformation map r, by the closed formulas
///   l_1^r(f) = [[nu,f]] + [[[[mu,r~]],f]] + 1/2 [[[[[[theta~,r~]],r~]],f]],
///   l_2^r(f,g) = [[[[mu,f]],g]] + [[[[[[theta~,r~]],f]],g]],
///   l_3^r = l_3.
/// Agrees with twist(controlling_algebra(om), r) coefficient-exact.
CurvedLInfty governing_algebra(const OmegaStructure& om, const Matrix& r);

/// Choice of graded Lie subalgebra B' for the pair construction.
enum class PairSubalgebra {
  Full,          // all of B
  BPrime,        // (+) C^{n|0}
  BDoublePrime,  // (+) (C^{n+1|-1} (+) C^{n|0})
  M,             // (+) (C^{n|0} (+) ... (+) C^{0|n})
};

bool pair_subalgebra_admits(PairSubalgebra sub, Bidegree kl);

/// The L-infinity algebra on s^{-1}B' (+) a with structure maps
///   l~_1((s^{-1te}F, f)) = (0, P(F)),
///   l~_2((s^{-1}F,0),(s^{-1}G,0)) = ((-1)^{|F|} s^{-1}[[F,G]], 0),
///   l~_k((s^{-1}F,0),(0,f_1),...,(0,f_{k-1})) = (0, P[[...[[F,f_1]],...,f_{k-1}]]),
/// extended by graded symmetry; all other patterns vanish (Delta = 0, so the
/// pure-a products are zero). Maurer-Cartan elements in degree 0 are pairs
/// (s^{-1}Omega, r) with Omega a Leibniz structure in B' and r a deformation
/// map for it. Needs K >= 4 for degree-0 Maurer-Cartan evaluation.
CurvedLInfty pair_algebra(const SplitSpace& sp, PairSubalgebra sub, int truncation);

/// Twist of a pair algebra by a Maurer-Cartan pair.
CurvedLInfty pair_twist(const CurvedLInfty& L, const GradedElement& alpha);

/// Projection P : B -> a (keep the C^{-1|n+1} component, restricted).
MultiMap project_to_a(const MultiMap& F, const SplitSpace& sp);

struct SymmetryCheckReport {
  bool ok = false;
  int checks = 0;
  std::vector<std::string> failures;
};

/// Transposition test of graded symmetry of every l_k on the given samples.
SymmetryCheckReport check_graded_symmetry(const CurvedLInfty& L,
                                          const std::vector<GradedElement>& samples);

struct JacobiCheckReport {
  bool ok = false;
  int checks = 0;
  std::vector<std::string> failures;
};

/// Generalized Jacobi identities
///   sum_{i=0..N} sum_{sigma in Sh(i,N-i)} eps(sigma)
///     l_{N-i+1}(l_i(x_{sigma(1)},...), x_{sigma(i+1)},...) = 0
/// for N = 0..max_n on tuples drawn from the samples.
JacobiCheckReport check_l_infinity_identities(const CurvedLInfty& L, int max_n,
                                              const std::vector<GradedElement>& samples);

/// Koszul sign of permuting homogeneous elements of the given degrees into
/// the order perm (output position -> original index).
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm);

}  // namespace ptl
