#include "ptl/multimap.hpp"

#include <algorithm>

namespace ptl {

MultiMap::MultiMap(int arity, int domain_dim, int codomain_dim, const Field& f)
    : arity_(arity), dom_(domain_dim), cod_(codomain_dim), field_(f) {
  require(arity >= 1, ErrorKind::ShapeError, "multimap arity must be >= 1");
  require(domain_dim >= 0 && codomain_dim >= 0, ErrorKind::ShapeError, "negative dimension");
  std::size_t n = static_cast<std::size_t>(cod_);
  for (int k = 0; k < arity_; ++k) n *= static_cast<std::size_t>(dom_);
  c_.assign(n, FieldScalar::zero(field_));
}

MultiMap MultiMap::identity(int dim, const Field& f) {
  MultiMap m(1, dim, dim, f);
  for (int i = 0; i < dim; ++i) {
    int idx[1] = {i};
    m.set_coeff(i, idx, FieldScalar::one(f));
  }
  return m;
}

std::size_t MultiMap::flat_index(int out, std::span<const int> idx) const {
  std::size_t pos = static_cast<std::size_t>(out);
  for (int k = 0; k < arity_; ++k) pos = pos * dom_ + idx[k];
  return pos;
}

void MultiMap::set_coeff(int out, std::span<const int> idx, const FieldScalar& v) {
  require(v.field() == field_, ErrorKind::FieldMismatch, "coefficient field differs from map field");
  c_[flat_index(out, idx)] = v;
}

void MultiMap::add_coeff(int out, std::span<const int> idx, const FieldScalar& v) {
  c_[flat_index(out, idx)] += v;
}

Vec MultiMap::eval(const std::vector<Vec>& args) const {
  require(static_cast<int>(args.size()) == arity_, ErrorKind::ShapeError,
          "argument count does not match arity");
  for (const auto& a : args)
    require(static_cast<int>(a.size()) == dom_, ErrorKind::ShapeError,
            "argument length does not match domain dimension");
  Vec out = zero_vec(cod_, field_);
  for_each_index(arity_, dom_, [&](const std::vector<int>& idx) {
    FieldScalar prod = FieldScalar::one(field_);
    for (int k = 0; k < arity_; ++k) {
      prod *= args[k][idx[k]];
      if (prod.is_zero()) return;
    }
    for (int j = 0; j < cod_; ++j) {
      const FieldScalar& cjk = coeff(j, idx);
      if (!cjk.is_zero()) out[j] += cjk * prod;
    }
  });
  return out;
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  require(arity_ == o.arity_ && dom_ == o.dom_ && cod_ == o.cod_, ErrorKind::ShapeError,
          "multimap shape mismatch in addition");
  require(field_ == o.field_, ErrorKind::FieldMismatch, "multimap field mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  require(arity_ == o.arity_ && dom_ == o.dom_ && cod_ == o.cod_, ErrorKind::ShapeError,
          "multimap shape mismatch in subtraction");
  require(field_ == o.field_, ErrorKind::FieldMismatch, "multimap field mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

MultiMap MultiMap::scaled(const FieldScalar& s) const {
  MultiMap m = *this;
  for (auto& x : m.c_) x *= s;
  return m;
}

MultiMap MultiMap::operator-() const {
  MultiMap m = *this;
  for (auto& x : m.c_) x = -x;
  return m;
}

std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  int n = p + q;
  // choose the p positions of `first` in lex order
  std::vector<int> comb(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) comb[i] = i;
  while (true) {
    Shuffle sh;
    sh.first = comb;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int x : comb) used[x] = true;
    for (int x = 0; x < n; ++x)
      if (!used[x]) sh.second.push_back(x);
    long inversions = 0;
    for (int b : sh.second)
      for (int a : sh.first)
        if (a > b) ++inversions;
    sh.sign = (inversions % 2 == 0) ? 1 : -1;
    out.push_back(std::move(sh));
    if (p == 0) break;
    int i = p - 1;
    while (i >= 0 && comb[i] == n - p + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < p; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

MultiMap diamond(const MultiMap& f, const MultiMap& g) {
  require(f.is_square() && g.is_square(), ErrorKind::ShapeError,
          "insertion product needs square maps G^{n} -> G");
  require(f.domain_dim() == g.domain_dim(), ErrorKind::SpaceMismatch,
          "insertion product needs maps on the same space");
  require(f.field() == g.field(), ErrorKind::FieldMismatch, "insertion product field mismatch");
  require(f.arity() <= kArityCap && g.arity() <= kArityCap, ErrorKind::ArityCapExceeded,
          "input arity above cap");

  const int N = f.domain_dim();
  const int m = f.arity();
  const int n = g.arity();
  const int M = m + n - 1;
  const Field& fld = f.field();
  MultiMap out(M, N, N, fld);

  std::vector<int> fargs(static_cast<std::size_t>(m));
  std::vector<int> gargs(static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i) {
    const int p = i - 1, q = n - 1;
    const int block_sign = ((std::int64_t(i - 1) * (n - 1)) % 2 == 0) ? 1 : -1;
    for (const Shuffle& sh : shuffles(p, q)) {
      const int sign = block_sign * sh.sign;
      for_each_index(M, N, [&](const std::vector<int>& idx) {
        for (int t = 0; t < q; ++t) gargs[t] = idx[sh.second[t]];
        gargs[q] = idx[p + q];  // fixed argument of g
        for (int t = 0; t < p; ++t) fargs[t] = idx[sh.first[t]];
        for (int t = p + q + 1; t < M; ++t) fargs[i + (t - p - q - 1)] = idx[t];
        for (int j = 0; j < N; ++j) {
          FieldScalar acc = FieldScalar::zero(fld);
          for (int s = 0; s < N; ++s) {
            const FieldScalar& gc = g.coeff(s, gargs);
            if (gc.is_zero()) continue;
            fargs[p] = s;  // g's output feeds f's i-th slot
            const FieldScalar& fc = f.coeff(j, fargs);
            if (fc.is_zero()) continue;
            acc += gc * fc;
          }
          if (acc.is_zero()) continue;
          if (sign < 0) acc = -acc;
          out.add_coeff(j, idx, acc);
        }
      });
    }
  }
  return out;
}

MultiMap balavoine_bracket(const MultiMap& f, const MultiMap& g) {
  MultiMap fg = diamond(f, g);
  MultiMap gf = diamond(g, f);
  const long e = static_cast<long>(f.arity() - 1) * (g.arity() - 1);
  return (e % 2 == 0) ? fg - gf : fg + gf;
}

namespace {

// bidegree slot k of the component owning a coefficient cell:
// g-output rows with a leading-G count a belong to k = a-1, h-output rows to
// k = a, where a counts domain slots below dim_g.
int cell_component_k(const SplitSpace& sp, int out, const std::vector<int>& idx) {
  int a = 0;
  for (int v : idx)
    if (v < sp.dim_g) ++a;
  return out < sp.dim_g ? a - 1 : a;
}

void check_split_map(const MultiMap& f, const SplitSpace& sp) {
  require(f.is_square() && f.domain_dim() == sp.total(), ErrorKind::SpaceMismatch,
          "map does not live on the split total space");
  require(f.field() == sp.field, ErrorKind::FieldMismatch, "map field differs from space field");
}

}  // namespace

bool has_bidegree(const MultiMap& f, const SplitSpace& sp, Bidegree kl) {
  check_split_map(f, sp);
  require(kl.k >= -1 && kl.l >= -1 && kl.k + kl.l == f.arity() - 1, ErrorKind::ShapeError,
          "bidegree inconsistent with arity");
  bool ok = true;
  for_each_index(f.arity(), sp.total(), [&](const std::vector<int>& idx) {
    if (!ok) return;
    for (int j = 0; j < sp.total() && ok; ++j) {
      if (f.coeff(j, idx).is_zero()) continue;
      if (cell_component_k(sp, j, idx) != kl.k) ok = false;
    }
  });
  return ok;
}

std::optional<Bidegree> bidegree_of(const MultiMap& f, const SplitSpace& sp) {
  check_split_map(f, sp);
  std::optional<int> found;
  bool mixed = false;
  for_each_index(f.arity(), sp.total(), [&](const std::vector<int>& idx) {
    if (mixed) return;
    for (int j = 0; j < sp.total(); ++j) {
      if (f.coeff(j, idx).is_zero()) continue;
      int k = cell_component_k(sp, j, idx);
      if (!found)
        found = k;
      else if (*found != k) {
        mixed = true;
        return;
      }
    }
  });
  if (mixed || !found) return std::nullopt;
  return Bidegree{*found, f.arity() - 1 - *found};
}

std::vector<std::pair<Bidegree, MultiMap>> bidegree_decompose(const MultiMap& f, const SplitSpace& sp) {
  check_split_map(f, sp);
  const int n = f.arity() - 1;
  std::vector<std::pair<Bidegree, MultiMap>> comps;
  for (int k = n + 1; k >= -1; --k)
    comps.emplace_back(Bidegree{k, n - k}, MultiMap(f.arity(), sp.total(), sp.total(), sp.field));
  for_each_index(f.arity(), sp.total(), [&](const std::vector<int>& idx) {
    for (int j = 0; j < sp.total(); ++j) {
      const FieldScalar& v = f.coeff(j, idx);
      if (v.is_zero()) continue;
      int k = cell_component_k(sp, j, idx);
      comps[static_cast<std::size_t>(n + 1 - k)].second.set_coeff(j, idx, v);
    }
  });
  return comps;
}

std::vector<Word> block_words(int g_count, int h_count) {
  std::vector<Word> out;
  if (g_count < 0 || h_count < 0) return out;
  Word w;
  auto rec = [&](auto&& self, int g_left, int h_left) -> void {
    if (g_left == 0 && h_left == 0) {
      out.push_back(w);
      return;
    }
    if (g_left > 0) {
      w.push_back(Part::G);
      self(self, g_left - 1, h_left);
      w.pop_back();
    }
    if (h_left > 0) {
      w.push_back(Part::H);
      self(self, g_left, h_left - 1);
      w.pop_back();
    }
  };
  rec(rec, g_count, h_count);
  return out;
}

Bilinear Bilinear::zero(int dim_a, int dim_b, int dim_out, const Field& f) {
  Bilinear b;
  b.dim_a = dim_a;
  b.dim_b = dim_b;
  b.dim_out = dim_out;
  b.field = f;
  b.c = zero_vec(dim_a * dim_b * dim_out, f);
  return b;
}

Vec Bilinear::eval(const Vec& x, const Vec& y) const {
  require(static_cast<int>(x.size()) == dim_a && static_cast<int>(y.size()) == dim_b,
          ErrorKind::ShapeError, "bilinear argument length mismatch");
  Vec out = zero_vec(dim_out, field);
  for (int j = 0; j < dim_out; ++j)
    for (int a = 0; a < dim_a; ++a)
      for (int b = 0; b < dim_b; ++b) out[j] += at(j, a, b) * x[a] * y[b];
  return out;
}

std::size_t BlockMap::block_size(const Word& w) const {
  std::size_t n = static_cast<std::size_t>(out_dim());
  for (Part p : w) n *= static_cast<std::size_t>(p == Part::G ? space.dim_g : space.dim_h);
  return n;
}

BlockMap BlockMap::zero(const SplitSpace& sp, int g_count, int h_count, bool to_g) {
  BlockMap bm;
  bm.space = sp;
  bm.g_count = g_count;
  bm.h_count = h_count;
  bm.to_g = to_g;
  for (const Word& w : block_words(g_count, h_count))
    bm.blocks.push_back(zero_vec(static_cast<int>(bm.block_size(w)), sp.field));
  return bm;
}

namespace {

// iterate positions of a block's coefficient array together with the global
// indices the slots occupy inside the total space
template <class F>
void for_each_block_entry(const BlockMap& bm, const Word& w, const Vec& block, F&& fn) {
  const int ar = bm.arity();
  std::vector<int> dims(static_cast<std::size_t>(ar));
  for (int s = 0; s < ar; ++s) dims[s] = (w[s] == Part::G) ? bm.space.dim_g : bm.space.dim_h;
  std::vector<int> local(static_cast<std::size_t>(ar), 0);
  std::vector<int> global(static_cast<std::size_t>(ar), 0);
  const int out_dim = bm.out_dim();
  for (int out = 0; out < out_dim; ++out) {
    std::fill(local.begin(), local.end(), 0);
    bool empty = false;
    for (int d : dims)
      if (d == 0) empty = true;
    if (empty && ar > 0) continue;
    while (true) {
      std::size_t pos = static_cast<std::size_t>(out);
      for (int s = 0; s < ar; ++s) {
        pos = pos * dims[s] + local[s];
        global[s] = (w[s] == Part::G) ? local[s] : bm.space.dim_g + local[s];
      }
      fn(out, pos, global);
      int s = ar - 1;
      while (s >= 0) {
        if (++local[s] < dims[s]) break;
        local[s] = 0;
        --s;
      }
      if (s < 0) break;
    }
  }
  (void)block;
}

}  // namespace

MultiMap horizontal_lift(const BlockMap& bm) {
  const auto words = block_words(bm.g_count, bm.h_count);
  require(bm.blocks.size() == words.size(), ErrorKind::ShapeError,
          "block count does not match the (k+l choose k) word list");
  const int ar = bm.arity();
  require(ar >= 1, ErrorKind::ShapeError, "cannot lift a nullary block map");
  MultiMap out(ar, bm.space.total(), bm.space.total(), bm.space.field);
  const int out_shift = bm.to_g ? 0 : bm.space.dim_g;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    require(bm.blocks[wi].size() == bm.block_size(words[wi]), ErrorKind::ShapeError,
            "block coefficient array has the wrong size");
    for_each_block_entry(bm, words[wi], bm.blocks[wi],
                         [&](int o, std::size_t pos, const std::vector<int>& global) {
                           const FieldScalar& v = bm.blocks[wi][pos];
                           if (!v.is_zero()) out.set_coeff(out_shift + o, global, v);
                         });
  }
  return out;
}

BlockMap restrict_blocks(const MultiMap& f, const SplitSpace& sp, int g_count, int h_count, bool to_g) {
  check_split_map(f, sp);
  require(f.arity() == g_count + h_count, ErrorKind::ShapeError,
          "block signature does not match map arity");
  BlockMap bm = BlockMap::zero(sp, g_count, h_count, to_g);
  const auto words = block_words(g_count, h_count);
  const int out_shift = to_g ? 0 : sp.dim_g;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    for_each_block_entry(bm, words[wi], bm.blocks[wi],
                         [&](int o, std::size_t pos, const std::vector<int>& global) {
                           bm.blocks[wi][pos] = f.coeff(out_shift + o, global);
                         });
  }
  return bm;
}

MultiMap lift_linear(const Matrix& r, const SplitSpace& sp) {
  require(r.rows() == sp.dim_g && r.cols() == sp.dim_h, ErrorKind::ShapeError,
          "linear map must be dim_g x dim_h");
  require(r.field() == sp.field, ErrorKind::FieldMismatch, "linear map field differs from space");
  BlockMap bm = BlockMap::zero(sp, 0, 1, true);
  for (int j = 0; j < sp.dim_g; ++j)
    for (int u = 0; u < sp.dim_h; ++u) bm.blocks[0][std::size_t(j) * sp.dim_h + u] = r.at(j, u);
  return horizontal_lift(bm);
}

MultiMap lift_a_element(const MultiMap& f, const SplitSpace& sp) {
  require(f.domain_dim() == sp.dim_h && f.codomain_dim() == sp.dim_g, ErrorKind::ShapeError,
          "expected a map h^{tensor n} -> g");
  require(f.field() == sp.field, ErrorKind::FieldMismatch, "field mismatch in lift");
  BlockMap bm = BlockMap::zero(sp, 0, f.arity(), true);
  bm.blocks[0] = f.raw();
  return horizontal_lift(bm);
}

MultiMap restrict_a_element(const MultiMap& f, const SplitSpace& sp) {
  check_split_map(f, sp);
  require(has_bidegree(f, sp, Bidegree{-1, f.arity()}), ErrorKind::ShapeError,
          "map has support outside C^{-1|n+1}");
  BlockMap bm = restrict_blocks(f, sp, 0, f.arity(), true);
  MultiMap out(f.arity(), sp.dim_h, sp.dim_g, sp.field);
  out.raw() = bm.blocks[0];
  return out;
}

}  // namespace ptl
