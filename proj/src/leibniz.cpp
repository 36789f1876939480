#include "ptl/leibniz.hpp"

namespace ptl {

namespace {

Vec bracket_basis(const MultiMap& b, int i, int j) {
  std::array<int, 2> idx{i, j};
  Vec out = zero_vec(b.codomain_dim(), b.field());
  for (int k = 0; k < b.codomain_dim(); ++k) out[k] = b.coeff(k, idx);
  return out;
}

Vec apply_bilinear_basis_left(const Bilinear& m, int a, const Vec& y) {
  // m(e_a, y)
  Vec out = zero_vec(m.dim_out, m.field);
  for (int j = 0; j < m.dim_out; ++j)
    for (int b = 0; b < m.dim_b; ++b) out[j] += m.at(j, a, b) * y[b];
  return out;
}

Vec apply_bilinear_basis_right(const Bilinear& m, const Vec& x, int b) {
  // m(x, e_b)
  Vec out = zero_vec(m.dim_out, m.field);
  for (int j = 0; j < m.dim_out; ++j)
    for (int a = 0; a < m.dim_a; ++a) out[j] += m.at(j, a, b) * x[a];
  return out;
}

}  // namespace

LeibnizCheckReport check_leibniz(const MultiMap& bracket) {
  require(bracket.arity() == 2 && bracket.is_square(), ErrorKind::ShapeError,
          "a Leibniz bracket is a square arity-2 map");
  const int n = bracket.domain_dim();
  const Field& f = bracket.field();

  LeibnizCheckReport rep;
  rep.ok = true;
  auto bl = [&](const Vec& x, const Vec& y) { return bracket.eval({x, y}); };
  auto basis = [&](int i) {
    Vec v = zero_vec(n, f);
    v[i] = FieldScalar::one(f);
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec x = basis(i), y = basis(j), z = basis(k);
        Vec lhs = bl(x, bl(y, z));
        Vec rhs = bl(bl(x, y), z);
        Vec rhs2 = bl(y, bl(x, z));
        Vec res = lhs;
        for (int t = 0; t < n; ++t) res[t] -= rhs[t] + rhs2[t];
        if (!is_zero_vec(res)) {
          rep.ok = false;
          rep.violations.push_back({{i, j, k}, std::move(res)});
        }
      }
  rep.mc_tensor = balavoine_bracket(bracket, bracket);
  rep.mc_zero = rep.mc_tensor.is_zero();
  return rep;
}

RepresentationCheckReport check_representation(const LeibnizAlgebra& alg, const Representation& rep) {
  const int g = alg.dim;
  const int v = rep.carrier_dim;
  const Field& f = alg.bracket.field();
  require(rep.rho_l.dim_a == g && rep.rho_l.dim_b == v && rep.rho_l.dim_out == v,
          ErrorKind::ShapeError, "rho^L must be g x V -> V");
  require(rep.rho_r.dim_a == v && rep.rho_r.dim_b == g && rep.rho_r.dim_out == v,
          ErrorKind::ShapeError, "rho^R must be V x g -> V");
  require(rep.rho_l.field == f && rep.rho_r.field == f, ErrorKind::FieldMismatch,
          "representation field differs from algebra field");

  RepresentationCheckReport out;
  out.ok = true;
  auto sub = [](Vec a, const Vec& b, const Vec& c) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] -= b[t] + c[t];
    return a;
  };
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y)
      for (int a = 0; a < v; ++a) {
        Vec bxy = bracket_basis(alg.bracket, x, y);
        Vec ea = zero_vec(v, f);
        ea[a] = FieldScalar::one(f);

        // rho^L(x, rho^L(y, v)) = rho^L([x,y], v) + rho^L(y, rho^L(x, v))
        Vec r1 = sub(apply_bilinear_basis_left(rep.rho_l, x, apply_bilinear_basis_left(rep.rho_l, y, ea)),
                     rep.rho_l.eval(bxy, ea),
                     apply_bilinear_basis_left(rep.rho_l, y, apply_bilinear_basis_left(rep.rho_l, x, ea)));
        // rho^L(x, rho^R(v, y)) = rho^R(rho^L(x,v), y) + rho^R(v, [x,y])
        Vec r2 = sub(apply_bilinear_basis_left(rep.rho_l, x, apply_bilinear_basis_right(rep.rho_r, ea, y)),
                     apply_bilinear_basis_right(rep.rho_r, apply_bilinear_basis_left(rep.rho_l, x, ea), y),
                     rep.rho_r.eval(ea, bxy));
        // rho^R(v, [x,y]) = rho^R(rho^R(v,x), y) + rho^L(x, rho^R(v, y))
        Vec r3 = sub(rep.rho_r.eval(ea, bxy),
                     apply_bilinear_basis_right(rep.rho_r, apply_bilinear_basis_right(rep.rho_r, ea, x), y),
                     apply_bilinear_basis_left(rep.rho_l, x, apply_bilinear_basis_right(rep.rho_r, ea, y)));

        if (!is_zero_vec(r1)) out.violations[0].push_back({{x, y, a}, std::move(r1)});
        if (!is_zero_vec(r2)) out.violations[1].push_back({{x, y, a}, std::move(r2)});
        if (!is_zero_vec(r3)) out.violations[2].push_back({{x, y, a}, std::move(r3)});
      }
  out.ok = out.violations[0].empty() && out.violations[1].empty() && out.violations[2].empty();
  return out;
}

Representation adjoint_rep(const LeibnizAlgebra& alg) {
  const int g = alg.dim;
  const Field& f = alg.bracket.field();
  Representation rep = Representation::zero(g, g, f);
  for (int j = 0; j < g; ++j)
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        std::array<int, 2> idx{a, b};
        rep.rho_l.at(j, a, b) = alg.bracket.coeff(j, idx);
        rep.rho_r.at(j, a, b) = alg.bracket.coeff(j, idx);
      }
  return rep;
}

Representation coadjoint_rep(const LeibnizAlgebra& alg) {
  const int g = alg.dim;
  const Field& f = alg.bracket.field();
  Representation rep = Representation::zero(g, g, f);
  // coad^L(e_i, e^*_a) = sum_c -B[a][i][c] e^*_c
  // coad^R(e^*_a, e_i) = sum_c (B[a][i][c] + B[a][c][i]) e^*_c
  for (int a = 0; a < g; ++a)
    for (int i = 0; i < g; ++i)
      for (int cc = 0; cc < g; ++cc) {
        std::array<int, 2> ic{i, cc}, ci{cc, i};
        rep.rho_l.at(cc, i, a) = -alg.bracket.coeff(a, ic);
        rep.rho_r.at(cc, a, i) = alg.bracket.coeff(a, ic) + alg.bracket.coeff(a, ci);
      }
  return rep;
}

MultiMap lp_coboundary(const MultiMap& f, const LeibnizAlgebra& alg, const Representation& rep) {
  const int g = alg.dim;
  const int v = rep.carrier_dim;
  const Field& fld = alg.bracket.field();
  const int n = f.arity();
  require(f.domain_dim() == g && f.codomain_dim() == v, ErrorKind::ShapeError,
          "cochain must be a map g^{tensor n} -> V");
  require(n + 1 <= kArityCap, ErrorKind::ArityCapExceeded, "cochain arity above cap");

  MultiMap out(n + 1, g, v, fld);
  std::vector<int> sub(static_cast<std::size_t>(n));
  for_each_index(n + 1, g, [&](const std::vector<int>& idx) {
    Vec acc = zero_vec(v, fld);
    // sum_i (-1)^{i+1} rho^L(x_i, f(..., x_i hat, ...))   (i = 1..n, 1-based)
    for (int i = 1; i <= n; ++i) {
      int t = 0;
      for (int s = 0; s < n + 1; ++s)
        if (s != i - 1) sub[t++] = idx[s];
      Vec fx = zero_vec(v, fld);
      for (int j = 0; j < v; ++j) fx[j] = f.coeff(j, sub);
      Vec term = apply_bilinear_basis_left(rep.rho_l, idx[i - 1], fx);
      if (i % 2 == 1)
        for (int j = 0; j < v; ++j) acc[j] += term[j];
      else
        for (int j = 0; j < v; ++j) acc[j] -= term[j];
    }
    // (-1)^{n+1} rho^R(f(x_1..x_n), x_{n+1})
    {
      for (int s = 0; s < n; ++s) sub[s] = idx[s];
      Vec fx = zero_vec(v, fld);
      for (int j = 0; j < v; ++j) fx[j] = f.coeff(j, sub);
      Vec term = apply_bilinear_basis_right(rep.rho_r, fx, idx[n]);
      if ((n + 1) % 2 == 0)
        for (int j = 0; j < v; ++j) acc[j] += term[j];
      else
        for (int j = 0; j < v; ++j) acc[j] -= term[j];
    }
    // sum_{i<j} (-1)^i f(x_1,...,x_i hat,...,x_{j-1},[x_i,x_j],x_{j+1},...)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n + 1; ++j) {
        Vec br = bracket_basis(alg.bracket, idx[i - 1], idx[j - 1]);
        for (int c = 0; c < g; ++c) {
          if (br[c].is_zero()) continue;
          int t = 0;
          for (int s = 1; s <= n + 1; ++s) {
            if (s == i) continue;
            sub[t++] = (s == j) ? c : idx[s - 1];
          }
          for (int jj = 0; jj < v; ++jj) {
            FieldScalar term = f.coeff(jj, sub) * br[c];
            if (term.is_zero()) continue;
            if (i % 2 == 1)
              acc[jj] -= term;
            else
              acc[jj] += term;
          }
        }
      }
    for (int j = 0; j < v; ++j)
      if (!acc[j].is_zero()) out.set_coeff(j, idx, acc[j]);
  });
  return out;
}

MultiMap lp_coboundary0(const Vec& v0, const LeibnizAlgebra& alg, const Representation& rep) {
  const int g = alg.dim;
  const int v = rep.carrier_dim;
  const Field& fld = alg.bracket.field();
  require(static_cast<int>(v0.size()) == v, ErrorKind::ShapeError,
          "0-cochain must be a carrier vector");
  MultiMap out(1, g, v, fld);
  for (int x = 0; x < g; ++x) {
    Vec term = apply_bilinear_basis_right(rep.rho_r, v0, x);
    std::array<int, 1> idx{x};
    for (int j = 0; j < v; ++j)
      if (!term[j].is_zero()) out.set_coeff(j, idx, -term[j]);
  }
  return out;
}

std::size_t cochain_dim(int algebra_dim, int carrier_dim, int n) {
  std::size_t d = static_cast<std::size_t>(carrier_dim);
  for (int i = 0; i < n; ++i) d *= static_cast<std::size_t>(algebra_dim);
  return d;
}

Vec cochain_to_vec(const MultiMap& f) {
  // basis order: input multi-index lexicographic (major), output index (minor)
  const int v = f.codomain_dim();
  Vec out = zero_vec(static_cast<int>(f.flat_size()), f.field());
  std::size_t pos = 0;
  for_each_index(f.arity(), f.domain_dim(), [&](const std::vector<int>& idx) {
    for (int j = 0; j < v; ++j) out[pos++] = f.coeff(j, idx);
  });
  return out;
}

Matrix coboundary_matrix(const LeibnizAlgebra& alg, const Representation& rep, int n) {
  const int g = alg.dim;
  const int v = rep.carrier_dim;
  const Field& fld = alg.bracket.field();
  require(n >= 0, ErrorKind::ShapeError, "negative cochain degree");
  require(n + 1 <= kArityCap, ErrorKind::ArityCapExceeded, "cochain degree above cap");
  const int dom = static_cast<int>(cochain_dim(g, v, n));
  const int cod = static_cast<int>(cochain_dim(g, v, n + 1));
  Matrix m(cod, dom, fld);

  int col = 0;
  auto emit = [&](const MultiMap& image) {
    Vec w = cochain_to_vec(image);
    for (int r = 0; r < cod; ++r)
      if (!w[r].is_zero()) m.set(r, col, w[r]);
    ++col;
  };
  if (n == 0) {
    for (int j = 0; j < v; ++j) {
      Vec e = zero_vec(v, fld);
      e[j] = FieldScalar::one(fld);
      emit(lp_coboundary0(e, alg, rep));
    }
    return m;
  }
  for_each_index(n, g, [&](const std::vector<int>& idx) {
    for (int j = 0; j < v; ++j) {
      MultiMap e(n, g, v, fld);
      e.set_coeff(j, idx, FieldScalar::one(fld));
      emit(lp_coboundary(e, alg, rep));
    }
  });
  return m;
}

std::vector<CohomologyRow> cohomology_dimensions(const LeibnizAlgebra& alg, const Representation& rep,
                                                 int N) {
  require(N >= 0 && N + 1 <= kArityCap, ErrorKind::ArityCapExceeded,
          "max degree above the arity cap");
  std::vector<CohomologyRow> rows;
  int prev_rank = 0;
  for (int n = 0; n <= N; ++n) {
    Matrix d = coboundary_matrix(alg, rep, n);
    int rk = rank(d);
    CohomologyRow row;
    row.n = n;
    row.cochain_dim = d.cols();
    row.cocycles = d.cols() - rk;
    row.coboundaries = (n == 0) ? 0 : prev_rank;
    row.cohomology = row.cocycles - row.coboundaries;
    rows.push_back(row);
    prev_rank = rk;
  }
  return rows;
}

}  // namespace ptl
