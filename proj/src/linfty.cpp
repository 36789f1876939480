#include "ptl/linfty.hpp"

#include <bit>

namespace ptl {

GradedElement GradedElement::a_element(MultiMap f) {
  GradedElement e;
  e.degree = f.arity() - 1;
  e.direct = std::move(f);
  return e;
}

GradedElement GradedElement::suspended_element(MultiMap F) {
  GradedElement e;
  e.degree = F.arity() - 2;
  e.suspended = std::move(F);
  return e;
}

GradedElement GradedElement::pair(MultiMap F, MultiMap f) {
  require(F.arity() - 2 == f.arity() - 1, ErrorKind::ShapeError,
          "pair parts have inconsistent degrees");
  GradedElement e;
  e.degree = f.arity() - 1;
  e.suspended = std::move(F);
  e.direct = std::move(f);
  return e;
}

bool GradedElement::is_zero() const {
  return (!suspended || suspended->is_zero()) && (!direct || direct->is_zero());
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  require(degree == o.degree, ErrorKind::ShapeError, "adding elements of different degree");
  if (o.suspended) {
    if (suspended)
      *suspended += *o.suspended;
    else
      suspended = o.suspended;
  }
  if (o.direct) {
    if (direct)
      *direct += *o.direct;
    else
      direct = o.direct;
  }
  return *this;
}

GradedElement GradedElement::scaled(const FieldScalar& s) const {
  GradedElement e = *this;
  if (e.suspended) e.suspended = e.suspended->scaled(s);
  if (e.direct) e.direct = e.direct->scaled(s);
  return e;
}

GradedElement CurvedLInfty::apply(int k, const std::vector<GradedElement>& xs) const {
  require(k >= 1, ErrorKind::ShapeError, "structure maps start at l_1");
  require(static_cast<int>(xs.size()) == k, ErrorKind::ShapeError,
          "argument count does not match k");
  int out_deg = 1;
  for (const auto& x : xs) out_deg += x.degree;
  if (k > truncation) return GradedElement::zero(out_deg);
  return evaluator(k, xs);
}

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& perm) {
  int parity = 0;
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) parity += degrees[perm[i]] * degrees[perm[j]];
  return (parity % 2 == 0) ? 1 : -1;
}

MultiMap project_to_a(const MultiMap& F, const SplitSpace& sp) {
  BlockMap bm = restrict_blocks(F, sp, 0, F.arity(), true);
  MultiMap out(F.arity(), sp.dim_h, sp.dim_g, sp.field);
  out.raw() = bm.blocks[0];
  return out;
}

namespace {

FieldScalar inv_factorial(const Field& f, int n) {
  FieldScalar v = FieldScalar::one(f);
  for (int i = 2; i <= n; ++i) v *= FieldScalar::of(f, i);
  return v.inverse();
}

void check_char(const Field& f, int truncation) {
  require(f.characteristic() == 0 || f.characteristic() > truncation,
          ErrorKind::CharacteristicTooSmall,
          "needs characteristic 0 or > " + std::to_string(truncation) +
              " to divide by the factorials involved");
}

}  // namespace

CurvedLInfty controlling_algebra(const OmegaStructure& om) {
  ProtoCheckReport chk = check_proto_twilled(om);
  require(chk.leibniz_ok, ErrorKind::InvalidOmega,
          "controlling algebra needs a proto-twilled structure ([[Omega,Omega]] = 0)");
  CurvedLInfty L;
  L.truncation = 3;
  L.provenance = LInftyProvenance::Controlling;
  L.space = om.space;
  L.curvature = GradedElement::a_element(om.eta);

  const SplitSpace sp = om.space;
  const MultiMap nu = om.nu, mu = om.mu, theta_tilde = om.theta_tilde;
  L.evaluator = [sp, nu, mu, theta_tilde](int k, const std::vector<GradedElement>& xs) {
    int out_deg = 1;
    for (const auto& x : xs) out_deg += x.degree;
    for (const auto& x : xs) {
      require(!x.has_suspended(), ErrorKind::ShapeError,
              "the controlling algebra lives on a = Hom(h^{n+1}, g)");
      if (!x.direct || x.direct->is_zero()) return GradedElement::zero(out_deg);
    }
    auto lift = [&](int i) { return lift_a_element(*xs[i].direct, sp); };
    MultiMap acc;
    switch (k) {
      case 1: acc = balavoine_bracket(nu, lift(0)); break;
      case 2: acc = balavoine_bracket(balavoine_bracket(mu, lift(0)), lift(1)); break;
      case 3:
        acc = balavoine_bracket(
            balavoine_bracket(balavoine_bracket(theta_tilde, lift(0)), lift(1)), lift(2));
        break;
      default: return GradedElement::zero(out_deg);
    }
    // restrict_a_element verifies the output lands in C^{-1|n+1}
    return GradedElement::a_element(restrict_a_element(acc, sp));
  };
  return L;
}

GradedElement mc_defect(const CurvedLInfty& L, const GradedElement& alpha) {
  require(alpha.degree == 0, ErrorKind::ShapeError, "Maurer-Cartan candidates have degree 0");
  const Field& f = L.space.field;
  check_char(f, L.truncation);
  GradedElement defect = GradedElement::zero(1);
  defect += L.curvature;
  for (int k = 1; k <= L.truncation; ++k) {
    std::vector<GradedElement> args(static_cast<std::size_t>(k), alpha);
    defect += L.apply(k, args).scaled(inv_factorial(f, k));
  }
  return defect;
}

CurvedLInfty twist(const CurvedLInfty& L, const GradedElement& alpha) {
  GradedElement defect = mc_defect(L, alpha);
  require(defect.is_zero(), ErrorKind::NotMaurerCartan,
          "cannot twist by an element with nonzero Maurer-Cartan defect");
  CurvedLInfty T;
  T.truncation = L.truncation;
  T.provenance = LInftyProvenance::Twisted;
  T.space = L.space;
  T.curvature = GradedElement::zero(1);
  const Field f = L.space.field;
  CurvedLInfty base = L;
  T.evaluator = [base, alpha, f](int k, const std::vector<GradedElement>& xs) {
    int out_deg = 1;
    for (const auto& x : xs) out_deg += x.degree;
    GradedElement acc = GradedElement::zero(out_deg);
    for (int n = 0; n + k <= base.truncation; ++n) {
      std::vector<GradedElement> args(static_cast<std::size_t>(n), alpha);
      args.insert(args.end(), xs.begin(), xs.end());
      // alpha has degree 0, so prepending it introduces no Koszul signs
      acc += base.apply(n + k, args).scaled(inv_factorial(f, n));
    }
    return acc;
  };
  return T;
}

CurvedLInfty governing_algebra(const OmegaStructure& om, const Matrix& r) {
  DeformationCheckReport chk = is_deformation_map(r, om);
  require(chk.is_deformation, ErrorKind::NotMaurerCartan,
          "the governing algebra twists by r, which must be a deformation map");
  const Field& f = om.space.field;
  require(f.characteristic() != 2 && f.characteristic() != 3, ErrorKind::CharacteristicTooSmall,
          "the governing algebra divides by 2");

  const SplitSpace sp = om.space;
  const MultiMap rt = lift_linear(r, sp);
  const MultiMap mu_r = balavoine_bracket(om.mu, rt);                 // [[mu, r~]]
  const MultiMap theta_r = balavoine_bracket(om.theta_tilde, rt);     // [[theta~, r~]]
  const MultiMap theta_rr = balavoine_bracket(theta_r, rt);
  const MultiMap nu = om.nu, mu = om.mu, theta_tilde = om.theta_tilde;
  const FieldScalar half = FieldScalar::one(f) / FieldScalar::of(f, 2);

  CurvedLInfty L;
  L.truncation = 3;
  L.provenance = LInftyProvenance::Twisted;
  L.space = sp;
  L.curvature = GradedElement::zero(1);
  L.evaluator = [sp, nu, mu, theta_tilde, mu_r, theta_r, theta_rr, half](
                    int k, const std::vector<GradedElement>& xs) {
    int out_deg = 1;
    for (const auto& x : xs) out_deg += x.degree;
    for (const auto& x : xs) {
      require(!x.has_suspended(), ErrorKind::ShapeError,
              "the governing algebra lives on a = Hom(h^{n+1}, g)");
      if (!x.direct || x.direct->is_zero()) return GradedElement::zero(out_deg);
    }
    auto lift = [&](int i) { return lift_a_element(*xs[i].direct, sp); };
    MultiMap acc;
    switch (k) {
      case 1: {
        MultiMap f0 = lift(0);
        acc = balavoine_bracket(nu, f0) + balavoine_bracket(mu_r, f0) +
              balavoine_bracket(theta_rr, f0).scaled(half);
        break;
      }
      case 2: {
        MultiMap f0 = lift(0), f1 = lift(1);
        acc = balavoine_bracket(balavoine_bracket(mu, f0), f1) +
              balavoine_bracket(balavoine_bracket(theta_r, f0), f1);
        break;
      }
      case 3:
        acc = balavoine_bracket(
            balavoine_bracket(balavoine_bracket(theta_tilde, lift(0)), lift(1)), lift(2));
        break;
      default: return GradedElement::zero(out_deg);
    }
    return GradedElement::a_element(restrict_a_element(acc, sp));
  };
  return L;
}

bool pair_subalgebra_admits(PairSubalgebra sub, Bidegree kl) {
  switch (sub) {
    case PairSubalgebra::Full: return true;
    case PairSubalgebra::BPrime: return kl.l == 0;
    case PairSubalgebra::BDoublePrime: return kl.l == 0 || kl.l == -1;
    case PairSubalgebra::M: return kl.k >= 0 && kl.l >= 0;
  }
  return false;
}

namespace {

void check_in_subalgebra(const MultiMap& F, const SplitSpace& sp, PairSubalgebra sub) {
  for (const auto& [kl, comp] : bidegree_decompose(F, sp)) {
    if (comp.is_zero()) continue;
    require(pair_subalgebra_admits(sub, kl), ErrorKind::InvalidOmega,
            "element has a bidegree " + std::to_string(kl.k) + "|" + std::to_string(kl.l) +
                " component outside the chosen subalgebra");
  }
}

}  // namespace

CurvedLInfty pair_algebra(const SplitSpace& sp, PairSubalgebra sub, int truncation) {
  require(truncation >= 4, ErrorKind::ShapeError,
          "pair algebra needs truncation >= 4 for degree-0 Maurer-Cartan evaluation");
  require(truncation <= kArityCap, ErrorKind::ArityCapExceeded, "truncation above arity cap");
  CurvedLInfty L;
  L.truncation = truncation;
  L.provenance = LInftyProvenance::Pair;
  L.space = sp;
  L.curvature = GradedElement::zero(1);  // Delta = 0

  L.evaluator = [sp, sub](int k, const std::vector<GradedElement>& xs) {
    int out_deg = 1;
    for (const auto& x : xs) out_deg += x.degree;
    for (const auto& x : xs)
      if (x.suspended) check_in_subalgebra(*x.suspended, sp, sub);

    GradedElement acc = GradedElement::zero(out_deg);
    // multilinear expansion over the part selections; with Delta = 0 the only
    // surviving patterns are: one suspended input (k - 1 direct ones), and two
    // suspended inputs when k == 2
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      const int nsus = std::popcount(mask);
      if (nsus > 2 || (nsus == 2 && k != 2)) continue;

      if (nsus == 2) {
        const GradedElement& x0 = xs[0];
        const GradedElement& x1 = xs[1];
        if (mask != 0b11u) continue;
        if (!x0.suspended || x0.suspended->is_zero()) continue;
        if (!x1.suspended || x1.suspended->is_zero()) continue;
        MultiMap br = balavoine_bracket(*x0.suspended, *x1.suspended);
        GradedElement term = GradedElement::zero(out_deg);
        term.suspended = ((x0.degree + 1) % 2 == 0) ? br : -br;  // (-1)^{|F|}
        acc += term;
        continue;
      }

      // exactly one suspended selection, at position t; the rest take their
      // direct parts
      int t = std::countr_zero(mask);
      const auto& Fopt = xs[t].suspended;
      if (!Fopt || Fopt->is_zero()) continue;
      bool degenerate = false;
      std::vector<const MultiMap*> fs;
      for (int j = 0; j < k; ++j) {
        if (j == t) continue;
        if (!xs[j].direct || xs[j].direct->is_zero()) {
          degenerate = true;
          break;
        }
        fs.push_back(&*xs[j].direct);
      }
      if (degenerate) continue;

      // Koszul sign for moving x_t to the front
      int parity = 0;
      for (int j = 0; j < t; ++j) parity += xs[t].degree * xs[j].degree;
      const int sign = (parity % 2 == 0) ? 1 : -1;

      MultiMap cur = *Fopt;
      for (const MultiMap* fj : fs) cur = balavoine_bracket(cur, lift_a_element(*fj, sp));
      MultiMap proj = project_to_a(cur, sp);
      GradedElement term = GradedElement::zero(out_deg);
      term.direct = (sign > 0) ? proj : -proj;
      acc += term;
    }
    return acc;
  };
  return L;
}

CurvedLInfty pair_twist(const CurvedLInfty& L, const GradedElement& alpha) {
  require(L.provenance == LInftyProvenance::Pair, ErrorKind::ShapeError,
          "pair_twist expects a pair algebra");
  return twist(L, alpha);
}

SymmetryCheckReport check_graded_symmetry(const CurvedLInfty& L,
                                          const std::vector<GradedElement>& samples) {
  SymmetryCheckReport rep;
  rep.ok = true;
  const std::size_t pool = std::min<std::size_t>(samples.size(), 4);
  for (int k = 2; k <= L.truncation; ++k) {
    std::vector<std::size_t> tup(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<GradedElement> xs;
      for (std::size_t i : tup) xs.push_back(samples[i]);
      for (int pos = 0; pos + 1 < k; ++pos) {
        GradedElement lhs = L.apply(k, xs);
        std::vector<GradedElement> swapped = xs;
        std::swap(swapped[pos], swapped[pos + 1]);
        GradedElement rhs = L.apply(k, swapped);
        int s = (xs[pos].degree * xs[pos + 1].degree) % 2 == 0 ? 1 : -1;
        GradedElement diff = lhs;
        diff += rhs.scaled(FieldScalar::of(L.space.field, -s));
        ++rep.checks;
        if (!diff.is_zero()) {
          rep.ok = false;
          rep.failures.push_back("l_" + std::to_string(k) + " not graded symmetric at slot " +
                                 std::to_string(pos));
        }
      }
      int pos = k - 1;
      while (pos >= 0) {
        if (++tup[pos] < pool) break;
        tup[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return rep;
}

JacobiCheckReport check_l_infinity_identities(const CurvedLInfty& L, int max_n,
                                              const std::vector<GradedElement>& samples) {
  JacobiCheckReport rep;
  rep.ok = true;
  require(max_n <= 3, ErrorKind::ShapeError, "identities implemented for N <= 3");

  auto run_tuple = [&](const std::vector<GradedElement>& xs) {
    const int N = static_cast<int>(xs.size());
    int residual_degree = 2;
    for (const auto& x : xs) residual_degree += x.degree;
    GradedElement residual = GradedElement::zero(residual_degree);
    std::vector<int> degrees;
    for (const auto& x : xs) degrees.push_back(x.degree);
    for (int i = 0; i <= N; ++i) {
      if (N - i + 1 > L.truncation) continue;
      if (i == 0) {
        if (L.curvature.is_zero()) continue;
        std::vector<GradedElement> outer{L.curvature};
        outer.insert(outer.end(), xs.begin(), xs.end());
        residual += L.apply(N + 1, outer);
        continue;
      }
      if (i > L.truncation) continue;
      for (const Shuffle& sh : shuffles(i, N - i)) {
        std::vector<int> perm = sh.first;
        perm.insert(perm.end(), sh.second.begin(), sh.second.end());
        const int eps = koszul_sign(degrees, perm);
        std::vector<GradedElement> inner_args;
        for (int t : sh.first) inner_args.push_back(xs[t]);
        GradedElement inner = L.apply(i, inner_args);
        std::vector<GradedElement> outer{inner};
        for (int t : sh.second) outer.push_back(xs[t]);
        residual += L.apply(N - i + 1, outer).scaled(FieldScalar::of(L.space.field, eps));
      }
    }
    ++rep.checks;
    if (!residual.is_zero()) {
      rep.ok = false;
      rep.failures.push_back("generalized Jacobi fails at N = " + std::to_string(xs.size()));
    }
  };

  const std::size_t pool = std::min<std::size_t>(samples.size(), 3);
  for (int N = 0; N <= max_n; ++N) {
    if (N == 0) {
      run_tuple({});
      continue;
    }
    std::vector<std::size_t> tup(static_cast<std::size_t>(N), 0);
    if (pool == 0) continue;
    while (true) {
      std::vector<GradedElement> xs;
      for (std::size_t i : tup) xs.push_back(samples[i]);
      run_tuple(xs);
      int pos = N - 1;
      while (pos >= 0) {
        if (++tup[pos] < pool) break;
        tup[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return rep;
}

}  // namespace ptl
