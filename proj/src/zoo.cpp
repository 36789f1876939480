#include "ptl/zoo.hpp"

#include <future>
#include <thread>

namespace ptl {

const char* example_kind_name(ExampleKind k) {
  switch (k) {
    case ExampleKind::DirectProduct: return "direct-product";
    case ExampleKind::Semidirect: return "semidirect";
    case ExampleKind::DerivationHost: return "derivation-host";
    case ExampleKind::Weight1Semidirect: return "weight1-semidirect";
    case ExampleKind::CrossedHomHost: return "crossed-hom-host";
    case ExampleKind::Modified: return "modified";
    case ExampleKind::ThetaTwisted: return "theta-twisted";
    case ExampleKind::Reynolds: return "reynolds";
    case ExampleKind::HemiSemidirect: return "hemi-semidirect";
    case ExampleKind::MatchedPair: return "matched-pair";
    case ExampleKind::RMatrixHost: return "r-matrix-host";
  }
  return "?";
}

std::optional<ExampleKind> example_kind_from_name(const std::string& name) {
  for (ExampleKind k :
       {ExampleKind::DirectProduct, ExampleKind::Semidirect, ExampleKind::DerivationHost,
        ExampleKind::Weight1Semidirect, ExampleKind::CrossedHomHost, ExampleKind::Modified,
        ExampleKind::ThetaTwisted, ExampleKind::Reynolds, ExampleKind::HemiSemidirect,
        ExampleKind::MatchedPair, ExampleKind::RMatrixHost})
    if (name == example_kind_name(k)) return k;
  return std::nullopt;
}

namespace {

Vec basis_vec(int dim, int i, const Field& f) {
  Vec v = zero_vec(dim, f);
  v[i] = FieldScalar::one(f);
  return v;
}

Vec col(const Matrix& r, int j) {
  Vec out = zero_vec(r.rows(), r.field());
  for (int i = 0; i < r.rows(); ++i) out[i] = r.at(i, j);
  return out;
}

void require_leibniz(const LeibnizAlgebra& a, const char* who) {
  if (!check_leibniz(a.bracket).ok)
    fail(ErrorKind::InvalidExampleInput,
         std::string(who) + ": bracket violates the Leibniz identity");
}

void require_rep(const LeibnizAlgebra& a, const Representation& rep, const char* who) {
  auto r = check_representation(a, rep);
  if (!r.violations[0].empty())
    fail(ErrorKind::InvalidExampleInput,
         std::string(who) + ": left-left action identity fails");
  if (!r.violations[1].empty())
    fail(ErrorKind::InvalidExampleInput,
         std::string(who) + ": left-right action identity fails");
  if (!r.violations[2].empty())
    fail(ErrorKind::InvalidExampleInput,
         std::string(who) + ": right action identity fails");
}

// the three extra compatibilities of the weight-1 host, on basis triples:
//   rho^L(x,[u,v]) = [rho^L(x,u),v] + [u,rho^L(x,v)]
//   [u,rho^L(x,v)] = [rho^R(u,x),v] + rho^L(x,[u,v])
//   [u,rho^R(v,x)] = rho^R([u,v],x) + [v,rho^R(u,x)]
void require_weight1_compat(const LeibnizAlgebra& g, const LeibnizAlgebra& h,
                            const Representation& rep) {
  const Field& f = g.bracket.field();
  const int dg = g.dim, dh = h.dim;
  auto brh = [&](const Vec& a, const Vec& b) { return h.bracket.eval({a, b}); };
  for (int x = 0; x < dg; ++x)
    for (int u = 0; u < dh; ++u)
      for (int v = 0; v < dh; ++v) {
        Vec ex = basis_vec(dg, x, f), eu = basis_vec(dh, u, f), ev = basis_vec(dh, v, f);
        Vec huv = brh(eu, ev);
        Vec lhs1 = rep.rho_l.eval(ex, huv);
        Vec rhs1 = brh(rep.rho_l.eval(ex, eu), ev);
        Vec t = brh(eu, rep.rho_l.eval(ex, ev));
        for (int j = 0; j < dh; ++j) rhs1[j] += t[j];
        for (int j = 0; j < dh; ++j)
          if (!(lhs1[j] - rhs1[j]).is_zero())
            fail(ErrorKind::InvalidExampleInput,
                 "weight-1 host: rho^L is not a derivation of the h bracket");

        Vec lhs2 = brh(eu, rep.rho_l.eval(ex, ev));
        Vec rhs2 = brh(rep.rho_r.eval(eu, ex), ev);
        t = rep.rho_l.eval(ex, huv);
        for (int j = 0; j < dh; ++j) rhs2[j] += t[j];
        for (int j = 0; j < dh; ++j)
          if (!(lhs2[j] - rhs2[j]).is_zero())
            fail(ErrorKind::InvalidExampleInput,
                 "weight-1 host: mixed rho^L/rho^R compatibility fails");

        Vec lhs3 = brh(eu, rep.rho_r.eval(ev, ex));
        Vec rhs3 = rep.rho_r.eval(huv, ex);
        t = brh(ev, rep.rho_r.eval(eu, ex));
        for (int j = 0; j < dh; ++j) rhs3[j] += t[j];
        for (int j = 0; j < dh; ++j)
          if (!(lhs3[j] - rhs3[j]).is_zero())
            fail(ErrorKind::InvalidExampleInput,
                 "weight-1 host: rho^R compatibility with the h bracket fails");
      }
}

void require_lie(const LeibnizAlgebra& a) {
  require_leibniz(a, "hemi-semidirect");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      std::array<int, 2> ij{i, j}, ji{j, i};
      for (int k = 0; k < a.dim; ++k)
        if (!(a.bracket.coeff(k, ij) + a.bracket.coeff(k, ji)).is_zero())
          fail(ErrorKind::InvalidExampleInput,
               "hemi-semidirect: the bracket is not antisymmetric, so g is not a Lie algebra");
    }
}

void require_lie_action(const LeibnizAlgebra& a, const Bilinear& rho) {
  // rho([x,y]) = rho(x)rho(y) - rho(y)rho(x)
  const Field& f = a.bracket.field();
  const int dg = a.dim, dv = rho.dim_b;
  require(rho.dim_a == dg && rho.dim_out == dv, ErrorKind::ShapeError,
          "hemi action must be g x V -> V");
  for (int x = 0; x < dg; ++x)
    for (int y = 0; y < dg; ++y)
      for (int v = 0; v < dv; ++v) {
        Vec ex = basis_vec(dg, x, f), ey = basis_vec(dg, y, f), evv = basis_vec(dv, v, f);
        Vec bxy = a.bracket.eval({ex, ey});
        Vec lhs = rho.eval(bxy, evv);
        Vec rhs = rho.eval(ex, rho.eval(ey, evv));
        Vec t = rho.eval(ey, rho.eval(ex, evv));
        for (int j = 0; j < dv; ++j) rhs[j] -= t[j];
        for (int j = 0; j < dv; ++j)
          if (!(lhs[j] - rhs[j]).is_zero())
            fail(ErrorKind::InvalidExampleInput,
                 "hemi-semidirect: rho is not a Lie algebra representation");
      }
}

const LeibnizAlgebra& second_algebra(const ExampleInputs& in, const char* who) {
  require(in.h.has_value(), ErrorKind::InvalidExampleInput,
          std::string(who) + ": needs a second Leibniz algebra");
  return *in.h;
}

const Representation& representation(const ExampleInputs& in, const char* who) {
  require(in.rep.has_value(), ErrorKind::InvalidExampleInput,
          std::string(who) + ": needs a representation");
  return *in.rep;
}

}  // namespace

OmegaStructure build(ExampleKind kind, const ExampleInputs& in) {
  const Field& f = in.g.bracket.field();
  const int dg = in.g.dim;

  switch (kind) {
    case ExampleKind::DirectProduct: {
      const LeibnizAlgebra& h = second_algebra(in, "direct product");
      require_leibniz(in.g, "direct product (g)");
      require_leibniz(h, "direct product (h)");
      SplitSpace sp{dg, h.dim, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      return OmegaStructure::assemble(sp, in.g.bracket, h.bracket, om.rho_l, om.rho_r, om.psi_l,
                                      om.psi_r, om.theta, om.eta);
    }
    case ExampleKind::Semidirect: {
      const Representation& rep = representation(in, "semidirect");
      require_leibniz(in.g, "semidirect");
      require_rep(in.g, rep, "semidirect");
      SplitSpace sp{dg, rep.carrier_dim, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      return OmegaStructure::assemble(sp, in.g.bracket, om.bracket_h, rep.rho_l, rep.rho_r,
                                      om.psi_l, om.psi_r, om.theta, om.eta);
    }
    case ExampleKind::DerivationHost: {
      // host on V (+) g: [(u,x),(v,y)] = (rho^L(x,v) + rho^R(u,y), [x,y]_g)
      const Representation& rep = representation(in, "derivation host");
      require_leibniz(in.g, "derivation host");
      require_rep(in.g, rep, "derivation host");
      SplitSpace sp{rep.carrier_dim, dg, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      Bilinear psi_l = rep.rho_l;  // g x V -> V matches h x g' -> g' slot-wise
      Bilinear psi_r = rep.rho_r;
      return OmegaStructure::assemble(sp, om.bracket_g, in.g.bracket, om.rho_l, om.rho_r, psi_l,
                                      psi_r, om.theta, om.eta);
    }
    case ExampleKind::Weight1Semidirect: {
      const LeibnizAlgebra& h = second_algebra(in, "weight-1 host");
      const Representation& rep = representation(in, "weight-1 host");
      require(rep.carrier_dim == h.dim, ErrorKind::InvalidExampleInput,
              "weight-1 host: the representation must act on the underlying space of h");
      require_leibniz(in.g, "weight-1 host (g)");
      require_leibniz(h, "weight-1 host (h)");
      require_rep(in.g, rep, "weight-1 host");
      require_weight1_compat(in.g, h, rep);
      SplitSpace sp{dg, h.dim, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      return OmegaStructure::assemble(sp, in.g.bracket, h.bracket, rep.rho_l, rep.rho_r, om.psi_l,
                                      om.psi_r, om.theta, om.eta);
    }
    case ExampleKind::CrossedHomHost: {
      // host on h (+) g: [(u,x),(v,y)] = ([u,v]_h + rho^L(x,v) + rho^R(u,y), [x,y]_g)
      const LeibnizAlgebra& h = second_algebra(in, "crossed homomorphism host");
      const Representation& rep = representation(in, "crossed homomorphism host");
      require(rep.carrier_dim == h.dim, ErrorKind::InvalidExampleInput,
              "crossed homomorphism host: the representation must act on the space of h");
      require_leibniz(in.g, "crossed homomorphism host (g)");
      require_leibniz(h, "crossed homomorphism host (h)");
      require_rep(in.g, rep, "crossed homomorphism host");
      require_weight1_compat(in.g, h, rep);
      SplitSpace sp{h.dim, dg, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      Bilinear psi_l = rep.rho_l;  // g x h -> h sits on the (h-slot, g-slot) block
      Bilinear psi_r = rep.rho_r;
      return OmegaStructure::assemble(sp, h.bracket, in.g.bracket, om.rho_l, om.rho_r, psi_l,
                                      psi_r, om.theta, om.eta);
    }
    case ExampleKind::Modified: {
      require_leibniz(in.g, "modified host");
      SplitSpace sp{dg, dg, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      Bilinear rho_l = Bilinear::zero(dg, dg, dg, f), rho_r = Bilinear::zero(dg, dg, dg, f);
      for (int j = 0; j < dg; ++j)
        for (int a = 0; a < dg; ++a)
          for (int b = 0; b < dg; ++b) {
            std::array<int, 2> ab{a, b};
            rho_l.at(j, a, b) = in.g.bracket.coeff(j, ab);
            rho_r.at(j, a, b) = in.g.bracket.coeff(j, ab);
          }
      return OmegaStructure::assemble(sp, in.g.bracket, om.bracket_h, rho_l, rho_r, om.psi_l,
                                      om.psi_r, om.theta, in.g.bracket /* eta = [,]_g */);
    }
    case ExampleKind::ThetaTwisted: {
      const Representation& rep = representation(in, "theta-twisted host");
      require(in.theta.has_value(), ErrorKind::InvalidExampleInput,
              "theta-twisted host: needs a 2-cochain theta");
      require_leibniz(in.g, "theta-twisted host");
      require_rep(in.g, rep, "theta-twisted host");
      require(in.theta->arity() == 2 && in.theta->domain_dim() == dg &&
                  in.theta->codomain_dim() == rep.carrier_dim,
              ErrorKind::ShapeError, "theta must be g x g -> V");
      if (!lp_coboundary(*in.theta, in.g, rep).is_zero())
        fail(ErrorKind::InvalidExampleInput,
             "theta-twisted host: theta is not a Leibniz 2-cocycle");
      SplitSpace sp{dg, rep.carrier_dim, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      return OmegaStructure::assemble(sp, in.g.bracket, om.bracket_h, rep.rho_l, rep.rho_r,
                                      om.psi_l, om.psi_r, *in.theta, om.eta);
    }
    case ExampleKind::Reynolds: {
      require_leibniz(in.g, "Reynolds host");
      SplitSpace sp{dg, dg, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      Bilinear rho_l = Bilinear::zero(dg, dg, dg, f), rho_r = Bilinear::zero(dg, dg, dg, f);
      for (int j = 0; j < dg; ++j)
        for (int a = 0; a < dg; ++a)
          for (int b = 0; b < dg; ++b) {
            std::array<int, 2> ab{a, b};
            rho_l.at(j, a, b) = in.g.bracket.coeff(j, ab);
            rho_r.at(j, a, b) = in.g.bracket.coeff(j, ab);
          }
      return OmegaStructure::assemble(sp, in.g.bracket, om.bracket_h, rho_l, rho_r, om.psi_l,
                                      om.psi_r, -in.g.bracket /* theta = -[,]_g */, om.eta);
    }
    case ExampleKind::HemiSemidirect: {
      require(in.lie_action.has_value(), ErrorKind::InvalidExampleInput,
              "hemi-semidirect: needs the Lie action rho");
      require_lie(in.g);
      require_lie_action(in.g, *in.lie_action);
      SplitSpace sp{dg, in.lie_action->dim_b, f};
      OmegaStructure om = OmegaStructure::zero(sp);
      return OmegaStructure::assemble(sp, in.g.bracket, om.bracket_h, *in.lie_action, om.rho_r,
                                      om.psi_l, om.psi_r, om.theta, om.eta);
    }
    case ExampleKind::MatchedPair: {
      const LeibnizAlgebra& h = second_algebra(in, "matched pair");
      require(in.rho_l && in.rho_r && in.psi_l && in.psi_r, ErrorKind::InvalidExampleInput,
              "matched pair: needs rho^L, rho^R, psi^L, psi^R");
      SplitSpace sp{dg, h.dim, f};
      OmegaStructure om_zero = OmegaStructure::zero(sp);
      OmegaStructure om =
          OmegaStructure::assemble(sp, in.g.bracket, h.bracket, *in.rho_l, *in.rho_r, *in.psi_l,
                                   *in.psi_r, om_zero.theta, om_zero.eta);
      ProtoCheckReport chk = check_proto_twilled(om);
      if (!chk.leibniz_ok) {
        for (const auto& eq : chk.equations)
          if (!eq.ok)
            fail(ErrorKind::InvalidExampleInput,
                 "matched pair: compatibility equation " + eq.name + " fails");
        fail(ErrorKind::InvalidExampleInput, "matched pair: the bracket is not Leibniz");
      }
      return om;
    }
    case ExampleKind::RMatrixHost: {
      require(in.sym.has_value(), ErrorKind::InvalidExampleInput,
              "r-matrix host: needs the symmetric 2-tensor s");
      return r_matrix_host(in.g, *in.sym).omega;
    }
  }
  fail(ErrorKind::InvalidExampleInput, "unknown example kind");
}

bool classify(ExampleKind kind, const ExampleInputs& in, const Matrix& r) {
  const Field& f = in.g.bracket.field();
  const int dg = in.g.dim;
  auto brg = [&](const Vec& a, const Vec& b) { return in.g.bracket.eval({a, b}); };

  switch (kind) {
    case ExampleKind::DirectProduct: {
      // r([u,v]_h) = [r(u),r(v)]_g
      const LeibnizAlgebra& h = *in.h;
      for (int u = 0; u < h.dim; ++u)
        for (int v = 0; v < h.dim; ++v) {
          Vec eu = basis_vec(h.dim, u, f), ev = basis_vec(h.dim, v, f);
          Vec lhs = r.apply(h.bracket.eval({eu, ev}));
          Vec rhs = brg(col(r, u), col(r, v));
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::Semidirect:
    case ExampleKind::RMatrixHost: {
      // [r(u),r(v)] = r(rho^L(r(u),v) + rho^R(u,r(v)))
      Representation rep = (kind == ExampleKind::RMatrixHost) ? coadjoint_rep(in.g) : *in.rep;
      const int dv = rep.carrier_dim;
      for (int u = 0; u < dv; ++u)
        for (int v = 0; v < dv; ++v) {
          Vec eu = basis_vec(dv, u, f), ev = basis_vec(dv, v, f);
          Vec lhs = brg(col(r, u), col(r, v));
          Vec inner = rep.rho_l.eval(col(r, u), ev);
          Vec t = rep.rho_r.eval(eu, col(r, v));
          for (int j = 0; j < dv; ++j) inner[j] += t[j];
          Vec rhs = r.apply(inner);
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::DerivationHost: {
      // r([x,y]_g) = rho^L(x,r(y)) + rho^R(r(x),y); here r : g -> V
      const Representation& rep = *in.rep;
      for (int x = 0; x < dg; ++x)
        for (int y = 0; y < dg; ++y) {
          Vec ex = basis_vec(dg, x, f), ey = basis_vec(dg, y, f);
          Vec lhs = r.apply(in.g.bracket.eval({ex, ey}));
          Vec rhs = rep.rho_l.eval(ex, col(r, y));
          Vec t = rep.rho_r.eval(col(r, x), ey);
          for (int j = 0; j < rep.carrier_dim; ++j) rhs[j] += t[j];
          for (int j = 0; j < rep.carrier_dim; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::Weight1Semidirect: {
      // [r(u),r(v)] = r([u,v]_h + rho^L(r(u),v) + rho^R(u,r(v)))
      const LeibnizAlgebra& h = *in.h;
      const Representation& rep = *in.rep;
      for (int u = 0; u < h.dim; ++u)
        for (int v = 0; v < h.dim; ++v) {
          Vec eu = basis_vec(h.dim, u, f), ev = basis_vec(h.dim, v, f);
          Vec lhs = brg(col(r, u), col(r, v));
          Vec inner = h.bracket.eval({eu, ev});
          Vec t = rep.rho_l.eval(col(r, u), ev);
          for (int j = 0; j < h.dim; ++j) inner[j] += t[j];
          t = rep.rho_r.eval(eu, col(r, v));
          for (int j = 0; j < h.dim; ++j) inner[j] += t[j];
          Vec rhs = r.apply(inner);
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::CrossedHomHost: {
      // r([x,y]_g) = [r(x),r(y)]_h + rho^L(x,r(y)) + rho^R(r(x),y); r : g -> h
      const LeibnizAlgebra& h = *in.h;
      const Representation& rep = *in.rep;
      for (int x = 0; x < dg; ++x)
        for (int y = 0; y < dg; ++y) {
          Vec ex = basis_vec(dg, x, f), ey = basis_vec(dg, y, f);
          Vec lhs = r.apply(in.g.bracket.eval({ex, ey}));
          Vec rhs = h.bracket.eval({col(r, x), col(r, y)});
          Vec t = rep.rho_l.eval(ex, col(r, y));
          for (int j = 0; j < h.dim; ++j) rhs[j] += t[j];
          t = rep.rho_r.eval(col(r, x), ey);
          for (int j = 0; j < h.dim; ++j) rhs[j] += t[j];
          for (int j = 0; j < h.dim; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::Modified: {
      // [r(x),r(y)] = r([r(x),y] + [x,r(y)]) - [x,y]
      for (int x = 0; x < dg; ++x)
        for (int y = 0; y < dg; ++y) {
          Vec ex = basis_vec(dg, x, f), ey = basis_vec(dg, y, f);
          Vec lhs = brg(col(r, x), col(r, y));
          Vec inner = brg(col(r, x), ey);
          Vec t = brg(ex, col(r, y));
          for (int j = 0; j < dg; ++j) inner[j] += t[j];
          Vec rhs = r.apply(inner);
          Vec bxy = brg(ex, ey);
          for (int j = 0; j < dg; ++j) rhs[j] -= bxy[j];
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::ThetaTwisted: {
      // [r(u),r(v)] = r(rho^L(r(u),v) + rho^R(u,r(v)) + theta(r(u),r(v)))
      const Representation& rep = *in.rep;
      const int dv = rep.carrier_dim;
      for (int u = 0; u < dv; ++u)
        for (int v = 0; v < dv; ++v) {
          Vec eu = basis_vec(dv, u, f), ev = basis_vec(dv, v, f);
          Vec lhs = brg(col(r, u), col(r, v));
          Vec inner = rep.rho_l.eval(col(r, u), ev);
          Vec t = rep.rho_r.eval(eu, col(r, v));
          for (int j = 0; j < dv; ++j) inner[j] += t[j];
          t = in.theta->eval({col(r, u), col(r, v)});
          for (int j = 0; j < dv; ++j) inner[j] += t[j];
          Vec rhs = r.apply(inner);
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::Reynolds: {
      // [r(x),r(y)] = r([r(x),y] + [x,r(y)] - [r(x),r(y)])
      for (int x = 0; x < dg; ++x)
        for (int y = 0; y < dg; ++y) {
          Vec ex = basis_vec(dg, x, f), ey = basis_vec(dg, y, f);
          Vec lhs = brg(col(r, x), col(r, y));
          Vec inner = brg(col(r, x), ey);
          Vec t = brg(ex, col(r, y));
          for (int j = 0; j < dg; ++j) inner[j] += t[j];
          for (int j = 0; j < dg; ++j) inner[j] -= lhs[j];
          Vec rhs = r.apply(inner);
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::HemiSemidirect: {
      // [r(u),r(v)] = r(rho(r(u)) v)
      const Bilinear& rho = *in.lie_action;
      const int dv = rho.dim_b;
      for (int u = 0; u < dv; ++u)
        for (int v = 0; v < dv; ++v) {
          Vec ev = basis_vec(dv, v, f);
          Vec lhs = brg(col(r, u), col(r, v));
          Vec rhs = r.apply(rho.eval(col(r, u), ev));
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
    case ExampleKind::MatchedPair: {
      // [r(u),r(v)]_g + psi^R(r(u),v) + psi^L(u,r(v))
      //   = r([u,v]_h + rho^L(r(u),v) + rho^R(u,r(v)))
      const LeibnizAlgebra& h = *in.h;
      for (int u = 0; u < h.dim; ++u)
        for (int v = 0; v < h.dim; ++v) {
          Vec eu = basis_vec(h.dim, u, f), ev = basis_vec(h.dim, v, f);
          Vec lhs = brg(col(r, u), col(r, v));
          Vec t = in.psi_r->eval(col(r, u), ev);
          for (int j = 0; j < dg; ++j) lhs[j] += t[j];
          t = in.psi_l->eval(eu, col(r, v));
          for (int j = 0; j < dg; ++j) lhs[j] += t[j];
          Vec inner = h.bracket.eval({eu, ev});
          Vec s = in.rho_l->eval(col(r, u), ev);
          for (int j = 0; j < h.dim; ++j) inner[j] += s[j];
          s = in.rho_r->eval(eu, col(r, v));
          for (int j = 0; j < h.dim; ++j) inner[j] += s[j];
          Vec rhs = r.apply(inner);
          for (int j = 0; j < dg; ++j)
            if (!(lhs[j] - rhs[j]).is_zero()) return false;
        }
      return true;
    }
  }
  fail(ErrorKind::InvalidExampleInput, "unknown example kind");
}

EquivalenceReport equivalence_check(ExampleKind kind, const ExampleInputs& in,
                                    const std::vector<Matrix>& samples) {
  OmegaStructure om = build(kind, in);
  EquivalenceReport rep;
  rep.ok = true;
  for (const Matrix& r : samples) {
    bool a = classify(kind, in, r);
    bool b = is_deformation_map(r, om).is_deformation;
    ++rep.tested;
    if (b) ++rep.deformation_maps;
    if (a != b) {
      rep.ok = false;
      rep.divergences.push_back(std::string("classify=") + (a ? "true" : "false") +
                                " but deformation-map=" + (b ? "true" : "false"));
    }
  }
  return rep;
}

namespace {

Matrix candidate_matrix(long t, int rows, int cols, const Field& f) {
  // column-major digits base p: entry (i,j) is digit i + rows*j of t
  Matrix r(rows, cols, f);
  long v = t;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      r.set(i, j, FieldScalar::of(f, v % f.p));
      v /= f.p;
    }
  return r;
}

long scan_size(const Field& f, int rows, int cols, long budget) {
  require(!f.is_rational(), ErrorKind::FieldMismatch,
          "exhaustive scans need a finite prime field");
  require(budget >= 1 && budget <= 1000000000L, ErrorKind::BudgetExceeded,
          "budget must lie in [1, 10^9]");
  long total = 1;
  for (int i = 0; i < rows * cols; ++i) {
    if (total > budget / f.p + 1) fail(ErrorKind::BudgetExceeded, "scan size exceeds budget");
    total *= f.p;
  }
  require(total <= budget, ErrorKind::BudgetExceeded,
          "scan size " + std::to_string(total) + " exceeds budget " + std::to_string(budget));
  return total;
}

}  // namespace

EquivalenceReport equivalence_check_exhaustive(ExampleKind kind, const ExampleInputs& in,
                                               long budget) {
  OmegaStructure om = build(kind, in);
  const Field& f = om.space.field;
  long total = scan_size(f, om.space.dim_g, om.space.dim_h, budget);
  EquivalenceReport rep;
  rep.ok = true;
  for (long t = 0; t < total; ++t) {
    Matrix r = candidate_matrix(t, om.space.dim_g, om.space.dim_h, f);
    bool a = classify(kind, in, r);
    bool b = is_deformation_map(r, om).is_deformation;
    ++rep.tested;
    if (b) ++rep.deformation_maps;
    if (a != b) {
      rep.ok = false;
      rep.divergences.push_back("candidate " + std::to_string(t) + ": classify=" +
                                (a ? "true" : "false") + " but deformation-map=" +
                                (b ? "true" : "false"));
    }
  }
  return rep;
}

long deformation_scan_size(const OmegaStructure& om, long budget) {
  return scan_size(om.space.field, om.space.dim_g, om.space.dim_h, budget);
}

std::vector<Matrix> enumerate_deformation_maps(const OmegaStructure& om, long budget) {
  const Field& f = om.space.field;
  const long total = scan_size(f, om.space.dim_g, om.space.dim_h, budget);

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (total < 64) workers = 1;
  const long chunk = (total + workers - 1) / workers;

  std::vector<std::future<std::vector<Matrix>>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    const long lo = static_cast<long>(w) * chunk;
    const long hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [lo, hi, &om, &f]() {
      std::vector<Matrix> hits;
      for (long t = lo; t < hi; ++t) {
        Matrix r = candidate_matrix(t, om.space.dim_g, om.space.dim_h, f);
        if (is_deformation_map(r, om).is_deformation) hits.push_back(std::move(r));
      }
      return hits;
    }));
  }
  std::vector<Matrix> out;  // chunks concatenate in order, preserving the scan order
  for (auto& fut : futures) {
    auto hits = fut.get();
    out.insert(out.end(), hits.begin(), hits.end());
  }
  return out;
}

RMatrixHostResult r_matrix_host(const LeibnizAlgebra& alg, const Matrix& sym) {
  const Field& f = alg.bracket.field();
  require(sym.rows() == alg.dim && sym.cols() == alg.dim, ErrorKind::ShapeError,
          "s must be a dim x dim coefficient matrix");
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j)
      require(sym.at(i, j) == sym.at(j, i), ErrorKind::NotSymmetric,
              "s must be a symmetric 2-tensor");
  require_leibniz(alg, "r-matrix host");

  Representation coad = coadjoint_rep(alg);
  SplitSpace sp{alg.dim, alg.dim, f};
  OmegaStructure zero_om = OmegaStructure::zero(sp);
  OmegaStructure om =
      OmegaStructure::assemble(sp, alg.bracket, zero_om.bracket_h, coad.rho_l, coad.rho_r,
                               zero_om.psi_l, zero_om.psi_r, zero_om.theta, zero_om.eta);
  // s#(e*_a) = sum_j s(e*_a, e*_j) e_j, so the matrix of s# is s itself
  RMatrixHostResult res{om, sym, false};
  res.is_r_matrix = is_deformation_map(sym, om).is_deformation;
  return res;
}

}  // namespace ptl
