#include "ptl/prototwilled.hpp"

namespace ptl {

namespace {

void check_shapes(const SplitSpace& sp, const MultiMap& bg, const MultiMap& bh, const Bilinear& rl,
                  const Bilinear& rr, const Bilinear& pl, const Bilinear& pr, const MultiMap& th,
                  const MultiMap& et) {
  require(sp.dim_g >= 0 && sp.dim_h >= 0 && sp.total() >= 1, ErrorKind::ShapeError,
          "split space must have positive total dimension");
  auto want = [&](bool c, const char* what) { require(c, ErrorKind::ShapeError, what); };
  want(bg.arity() == 2 && bg.domain_dim() == sp.dim_g && bg.codomain_dim() == sp.dim_g,
       "bracket_g must be g x g -> g");
  want(bh.arity() == 2 && bh.domain_dim() == sp.dim_h && bh.codomain_dim() == sp.dim_h,
       "bracket_h must be h x h -> h");
  want(th.arity() == 2 && th.domain_dim() == sp.dim_g && th.codomain_dim() == sp.dim_h,
       "theta must be g x g -> h");
  want(et.arity() == 2 && et.domain_dim() == sp.dim_h && et.codomain_dim() == sp.dim_g,
       "eta must be h x h -> g");
  want(rl.dim_a == sp.dim_g && rl.dim_b == sp.dim_h && rl.dim_out == sp.dim_h,
       "rho^L must be g x h -> h");
  want(rr.dim_a == sp.dim_h && rr.dim_b == sp.dim_g && rr.dim_out == sp.dim_h,
       "rho^R must be h x g -> h");
  want(pl.dim_a == sp.dim_h && pl.dim_b == sp.dim_g && pl.dim_out == sp.dim_g,
       "psi^L must be h x g -> g");
  want(pr.dim_a == sp.dim_g && pr.dim_b == sp.dim_h && pr.dim_out == sp.dim_g,
       "psi^R must be g x h -> g");
  for (const Field& fl : {bg.field(), bh.field(), th.field(), et.field(), rl.field, rr.field,
                          pl.field, pr.field})
    require(fl == sp.field, ErrorKind::FieldMismatch, "component field differs from space field");
}

Vec bilinear_block_vec(const Bilinear& b) { return b.c; }

Matrix require_linear(const Matrix& r, const OmegaStructure& om) {
  require(r.rows() == om.space.dim_g && r.cols() == om.space.dim_h, ErrorKind::ShapeError,
          "r must be a dim_g x dim_h matrix");
  require(r.field() == om.space.field, ErrorKind::FieldMismatch,
          "r field differs from the structure field");
  return r;
}

Vec mat_apply_basis(const Matrix& r, int col) {
  Vec out = zero_vec(r.rows(), r.field());
  for (int i = 0; i < r.rows(); ++i) out[i] = r.at(i, col);
  return out;
}

}  // namespace

OmegaStructure OmegaStructure::zero(const SplitSpace& sp) {
  return assemble(sp, MultiMap(2, sp.dim_g, sp.dim_g, sp.field),
                  MultiMap(2, sp.dim_h, sp.dim_h, sp.field),
                  Bilinear::zero(sp.dim_g, sp.dim_h, sp.dim_h, sp.field),
                  Bilinear::zero(sp.dim_h, sp.dim_g, sp.dim_h, sp.field),
                  Bilinear::zero(sp.dim_h, sp.dim_g, sp.dim_g, sp.field),
                  Bilinear::zero(sp.dim_g, sp.dim_h, sp.dim_g, sp.field),
                  MultiMap(2, sp.dim_g, sp.dim_h, sp.field),
                  MultiMap(2, sp.dim_h, sp.dim_g, sp.field));
}

OmegaStructure OmegaStructure::assemble(const SplitSpace& sp, MultiMap bracket_g, MultiMap bracket_h,
                                        Bilinear rho_l, Bilinear rho_r, Bilinear psi_l,
                                        Bilinear psi_r, MultiMap theta, MultiMap eta) {
  check_shapes(sp, bracket_g, bracket_h, rho_l, rho_r, psi_l, psi_r, theta, eta);
  OmegaStructure om;
  om.space = sp;
  om.bracket_g = std::move(bracket_g);
  om.bracket_h = std::move(bracket_h);
  om.theta = std::move(theta);
  om.eta = std::move(eta);
  om.rho_l = std::move(rho_l);
  om.rho_r = std::move(rho_r);
  om.psi_l = std::move(psi_l);
  om.psi_r = std::move(psi_r);

  // theta~ in C^{2|-1}: h-output on the (G,G) block
  {
    BlockMap bm = BlockMap::zero(sp, 2, 0, false);
    bm.blocks[0] = om.theta.raw();
    om.theta_tilde = horizontal_lift(bm);
  }
  // mu in C^{1|0}: g-output bracket_g on (G,G); h-output rho^L on (G,H), rho^R on (H,G)
  {
    BlockMap bmg = BlockMap::zero(sp, 2, 0, true);
    bmg.blocks[0] = om.bracket_g.raw();
    BlockMap bmh = BlockMap::zero(sp, 1, 1, false);
    bmh.blocks[0] = bilinear_block_vec(om.rho_l);   // word (G,H)
    bmh.blocks[1] = bilinear_block_vec(om.rho_r);   // word (H,G)
    om.mu = horizontal_lift(bmg) + horizontal_lift(bmh);
  }
  // nu in C^{0|1}: g-output psi^R on (G,H), psi^L on (H,G); h-output bracket_h on (H,H)
  {
    BlockMap bng = BlockMap::zero(sp, 1, 1, true);
    bng.blocks[0] = bilinear_block_vec(om.psi_r);   // word (G,H)
    bng.blocks[1] = bilinear_block_vec(om.psi_l);   // word (H,G)
    BlockMap bnh = BlockMap::zero(sp, 0, 2, false);
    bnh.blocks[0] = om.bracket_h.raw();
    om.nu = horizontal_lift(bng) + horizontal_lift(bnh);
  }
  // eta~ in C^{-1|2}: g-output on the (H,H) block
  {
    BlockMap bm = BlockMap::zero(sp, 0, 2, true);
    bm.blocks[0] = om.eta.raw();
    om.eta_tilde = horizontal_lift(bm);
  }
  om.omega = om.theta_tilde + om.mu + om.nu + om.eta_tilde;
  return om;
}

OmegaStructure OmegaStructure::from_total(const SplitSpace& sp, const MultiMap& omega) {
  require(omega.arity() == 2 && omega.is_square() && omega.domain_dim() == sp.total(),
          ErrorKind::ShapeError, "omega must be a square arity-2 map on the total space");
  require(omega.field() == sp.field, ErrorKind::FieldMismatch, "omega field differs from space");
  const int g = sp.dim_g, h = sp.dim_h;
  const Field& f = sp.field;
  MultiMap bg(2, g, g, f), bh(2, h, h, f), th(2, g, h, f), et(2, h, g, f);
  Bilinear rl = Bilinear::zero(g, h, h, f), rr = Bilinear::zero(h, g, h, f);
  Bilinear pl = Bilinear::zero(h, g, g, f), pr = Bilinear::zero(g, h, g, f);

  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      std::array<int, 2> idx{a, b};
      for (int j = 0; j < g; ++j) bg.set_coeff(j, idx, omega.coeff(j, idx));
      std::array<int, 2> same{a, b};
      for (int j = 0; j < h; ++j) th.set_coeff(j, same, omega.coeff(g + j, idx));
    }
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      std::array<int, 2> gidx{g + a, g + b}, idx{a, b};
      for (int j = 0; j < g; ++j) et.set_coeff(j, idx, omega.coeff(j, gidx));
      for (int j = 0; j < h; ++j) bh.set_coeff(j, idx, omega.coeff(g + j, gidx));
    }
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < h; ++b) {
      std::array<int, 2> gidx{a, g + b};
      for (int j = 0; j < g; ++j) pr.at(j, a, b) = omega.coeff(j, gidx);
      for (int j = 0; j < h; ++j) rl.at(j, a, b) = omega.coeff(g + j, gidx);
    }
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < g; ++b) {
      std::array<int, 2> gidx{g + a, b};
      for (int j = 0; j < g; ++j) pl.at(j, a, b) = omega.coeff(j, gidx);
      for (int j = 0; j < h; ++j) rr.at(j, a, b) = omega.coeff(g + j, gidx);
    }
  return assemble(sp, std::move(bg), std::move(bh), std::move(rl), std::move(rr), std::move(pl),
                  std::move(pr), std::move(th), std::move(et));
}

ProtoCheckReport check_proto_twilled(const OmegaStructure& om) {
  ProtoCheckReport rep;
  rep.omega_square = balavoine_bracket(om.omega, om.omega);
  rep.leibniz_ok = rep.omega_square.is_zero();

  const Field& f = om.space.field;
  FieldScalar two = FieldScalar::of(f, 2);
  auto push = [&](std::string name, MultiMap res) {
    EquationCheck eq;
    eq.name = std::move(name);
    eq.ok = res.is_zero();
    eq.residual = std::move(res);
    rep.equations.push_back(std::move(eq));
  };
  push("[[mu,theta~]]", balavoine_bracket(om.mu, om.theta_tilde));
  push("[[mu,mu]] + 2[[nu,theta~]]",
       balavoine_bracket(om.mu, om.mu) + balavoine_bracket(om.nu, om.theta_tilde).scaled(two));
  push("[[mu,nu]] + [[theta~,eta~]]",
       balavoine_bracket(om.mu, om.nu) + balavoine_bracket(om.theta_tilde, om.eta_tilde));
  push("[[nu,nu]] + 2[[mu,eta~]]",
       balavoine_bracket(om.nu, om.nu) + balavoine_bracket(om.mu, om.eta_tilde).scaled(two));
  push("[[nu,eta~]]", balavoine_bracket(om.nu, om.eta_tilde));

  rep.quasi_twilled = om.eta_tilde.is_zero();
  rep.twilled = rep.quasi_twilled && om.theta_tilde.is_zero();
  return rep;
}

DeformationCheckReport is_deformation_map(const Matrix& r, const OmegaStructure& om) {
  require_linear(r, om);
  const SplitSpace& sp = om.space;
  const Field& f = sp.field;
  DeformationCheckReport rep;
  rep.residual = MultiMap(2, sp.dim_h, sp.dim_g, f);

  // residual(u,v) = [r(u),r(v)]_g + psi^R(r(u),v) + psi^L(u,r(v)) + eta(u,v)
  //               - r([u,v]_h + rho^L(r(u),v) + rho^R(u,r(v)) + theta(r(u),r(v)))
  for (int u = 0; u < sp.dim_h; ++u)
    for (int v = 0; v < sp.dim_h; ++v) {
      Vec ru = mat_apply_basis(r, u), rv = mat_apply_basis(r, v);
      Vec eu = zero_vec(sp.dim_h, f), ev = zero_vec(sp.dim_h, f);
      eu[u] = FieldScalar::one(f);
      ev[v] = FieldScalar::one(f);

      Vec lhs = om.bracket_g.eval({ru, rv});
      Vec t = om.psi_r.eval(ru, ev);
      for (int j = 0; j < sp.dim_g; ++j) lhs[j] += t[j];
      t = om.psi_l.eval(eu, rv);
      for (int j = 0; j < sp.dim_g; ++j) lhs[j] += t[j];
      t = om.eta.eval({eu, ev});
      for (int j = 0; j < sp.dim_g; ++j) lhs[j] += t[j];

      Vec inner = om.bracket_h.eval({eu, ev});
      Vec s = om.rho_l.eval(ru, ev);
      for (int j = 0; j < sp.dim_h; ++j) inner[j] += s[j];
      s = om.rho_r.eval(eu, rv);
      for (int j = 0; j < sp.dim_h; ++j) inner[j] += s[j];
      s = om.theta.eval({ru, rv});
      for (int j = 0; j < sp.dim_h; ++j) inner[j] += s[j];
      Vec rhs = r.apply(inner);

      std::array<int, 2> idx{u, v};
      for (int j = 0; j < sp.dim_g; ++j) {
        FieldScalar d = lhs[j] - rhs[j];
        if (!d.is_zero()) rep.residual.set_coeff(j, idx, d);
      }
    }
  rep.identity_ok = rep.residual.is_zero();

  // independent cross-check: Gr(r) closed under the assembled bracket
  rep.graph_ok = true;
  for (int u = 0; u < sp.dim_h && rep.graph_ok; ++u)
    for (int v = 0; v < sp.dim_h && rep.graph_ok; ++v) {
      Vec gu = zero_vec(sp.total(), f), gv = zero_vec(sp.total(), f);
      for (int j = 0; j < sp.dim_g; ++j) {
        gu[j] = r.at(j, u);
        gv[j] = r.at(j, v);
      }
      gu[sp.dim_g + u] = FieldScalar::one(f);
      gv[sp.dim_g + v] = FieldScalar::one(f);
      Vec w = om.omega.eval({gu, gv});
      Vec wh = zero_vec(sp.dim_h, f);
      for (int j = 0; j < sp.dim_h; ++j) wh[j] = w[sp.dim_g + j];
      Vec rwh = r.apply(wh);
      for (int j = 0; j < sp.dim_g; ++j)
        if (!(w[j] - rwh[j]).is_zero()) rep.graph_ok = false;
    }

  rep.is_deformation = rep.identity_ok;
  return rep;
}

LeibnizAlgebra induced_bracket(const Matrix& r, const OmegaStructure& om) {
  auto rep = is_deformation_map(r, om);
  require(rep.is_deformation, ErrorKind::NotADeformationMap,
          "r does not satisfy the deformation-map identity");
  const SplitSpace& sp = om.space;
  const Field& f = sp.field;
  MultiMap br(2, sp.dim_h, sp.dim_h, f);
  for (int u = 0; u < sp.dim_h; ++u)
    for (int v = 0; v < sp.dim_h; ++v) {
      Vec ru = mat_apply_basis(r, u), rv = mat_apply_basis(r, v);
      Vec eu = zero_vec(sp.dim_h, f), ev = zero_vec(sp.dim_h, f);
      eu[u] = FieldScalar::one(f);
      ev[v] = FieldScalar::one(f);
      Vec val = om.bracket_h.eval({eu, ev});
      Vec t = om.rho_l.eval(ru, ev);
      for (int j = 0; j < sp.dim_h; ++j) val[j] += t[j];
      t = om.rho_r.eval(eu, rv);
      for (int j = 0; j < sp.dim_h; ++j) val[j] += t[j];
      t = om.theta.eval({ru, rv});
      for (int j = 0; j < sp.dim_h; ++j) val[j] += t[j];
      std::array<int, 2> idx{u, v};
      for (int j = 0; j < sp.dim_h; ++j)
        if (!val[j].is_zero()) br.set_coeff(j, idx, val[j]);
    }
  return LeibnizAlgebra{sp.dim_h, std::move(br)};
}

Representation induced_representation(const Matrix& r, const OmegaStructure& om) {
  auto chk = is_deformation_map(r, om);
  require(chk.is_deformation, ErrorKind::NotADeformationMap,
          "r does not satisfy the deformation-map identity");
  const SplitSpace& sp = om.space;
  const Field& f = sp.field;
  Representation rep = Representation::zero(sp.dim_h, sp.dim_g, f);
  for (int u = 0; u < sp.dim_h; ++u)
    for (int x = 0; x < sp.dim_g; ++x) {
      Vec ru = mat_apply_basis(r, u);
      Vec eu = zero_vec(sp.dim_h, f), ex = zero_vec(sp.dim_g, f);
      eu[u] = FieldScalar::one(f);
      ex[x] = FieldScalar::one(f);

      // psi^L_r(u,x) = psi^L(u,x) + [r(u),x]_g - r(rho^R(u,x) + theta(r(u),x))
      Vec left = om.psi_l.eval(eu, ex);
      Vec t = om.bracket_g.eval({ru, ex});
      for (int j = 0; j < sp.dim_g; ++j) left[j] += t[j];
      Vec inner = om.rho_r.eval(eu, ex);
      Vec t2 = om.theta.eval({ru, ex});
      for (int j = 0; j < sp.dim_h; ++j) inner[j] += t2[j];
      Vec rin = r.apply(inner);
      for (int j = 0; j < sp.dim_g; ++j) left[j] -= rin[j];
      for (int j = 0; j < sp.dim_g; ++j) rep.rho_l.at(j, u, x) = left[j];

      // psi^R_r(x,u) = psi^R(x,u) + [x,r(u)]_g - r(rho^L(x,u) + theta(x,r(u)))
      Vec right = om.psi_r.eval(ex, eu);
      t = om.bracket_g.eval({ex, ru});
      for (int j = 0; j < sp.dim_g; ++j) right[j] += t[j];
      inner = om.rho_l.eval(ex, eu);
      t2 = om.theta.eval({ex, ru});
      for (int j = 0; j < sp.dim_h; ++j) inner[j] += t2[j];
      rin = r.apply(inner);
      for (int j = 0; j < sp.dim_g; ++j) right[j] -= rin[j];
      for (int j = 0; j < sp.dim_g; ++j) rep.rho_r.at(j, x, u) = right[j];
    }
  return rep;
}

OmegaStructure twist_omega(const Matrix& r, const OmegaStructure& om) {
  const Field& f = om.space.field;
  require(f.characteristic() != 2 && f.characteristic() != 3, ErrorKind::CharacteristicTooSmall,
          "twisting divides by 2 and 6; use characteristic 0 or >= 5");
  require_linear(r, om);
  MultiMap rt = lift_linear(r, om.space);

  FieldScalar half = FieldScalar::one(f) / FieldScalar::of(f, 2);
  FieldScalar sixth = FieldScalar::one(f) / FieldScalar::of(f, 6);

  MultiMap t1 = balavoine_bracket(om.theta_tilde, rt);      // [[theta~, r~]]
  MultiMap t2 = balavoine_bracket(t1, rt);                  // [[[[theta~,r~]],r~]]
  MultiMap t3 = balavoine_bracket(t2, rt);
  MultiMap m1 = balavoine_bracket(om.mu, rt);               // [[mu, r~]]
  MultiMap m2 = balavoine_bracket(m1, rt);
  MultiMap n1 = balavoine_bracket(om.nu, rt);               // [[nu, r~]]

  MultiMap mu_r = om.mu + t1;
  MultiMap nu_r = om.nu + m1 + t2.scaled(half);
  MultiMap eta_r = om.eta_tilde + n1 + m2.scaled(half) + t3.scaled(sixth);
  MultiMap omega_r = om.theta_tilde + mu_r + nu_r + eta_r;
  return OmegaStructure::from_total(om.space, omega_r);
}

MultiMap deformation_coboundary(const MultiMap& f, const Matrix& r, const OmegaStructure& om) {
  LeibnizAlgebra hr = induced_bracket(r, om);
  Representation rep = induced_representation(r, om);
  return lp_coboundary(f, hr, rep);
}

MultiMap deformation_coboundary0(const Vec& v, const Matrix& r, const OmegaStructure& om) {
  LeibnizAlgebra hr = induced_bracket(r, om);
  Representation rep = induced_representation(r, om);
  return lp_coboundary0(v, hr, rep);
}

std::vector<CohomologyRow> deformation_cohomology(const Matrix& r, const OmegaStructure& om, int N) {
  LeibnizAlgebra hr = induced_bracket(r, om);
  Representation rep = induced_representation(r, om);
  return cohomology_dimensions(hr, rep, N);
}

}  // namespace ptl
