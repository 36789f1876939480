#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ptl/field.hpp"
#include "ptl/matrix.hpp"

namespace ptl {

/// Operations reject input maps above this arity. Bracket *results* may
/// exceed it transiently (a Jacobi check on three arity-3 maps passes through
/// arity 7); they are plain values and are never re-validated.
inline constexpr int kArityCap = 6;

/// A split space G = g (+) h with the basis ordered so indices 0..dim_g-1
/// span g and dim_g..dim_g+dim_h-1 span h.
struct SplitSpace {
  int dim_g = 0;
  int dim_h = 0;
  Field field;

  int total() const { return dim_g + dim_h; }
  friend bool operator==(const SplitSpace&, const SplitSpace&) = default;
};

/// Dense multilinear map V^{tensor arity} -> W stored as structure constants
/// c[j][i_1 ... i_arity], j over the codomain basis, i_k over the domain
/// basis. Maps G^{tensor n+1} -> G carry degree n in the graded Lie algebra
/// they inhabit.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(int arity, int domain_dim, int codomain_dim, const Field& f);

  static MultiMap identity(int dim, const Field& f);

  int arity() const { return arity_; }
  int domain_dim() const { return dom_; }
  int codomain_dim() const { return cod_; }
  const Field& field() const { return field_; }
  bool is_square() const { return dom_ == cod_; }

  std::size_t flat_size() const { return c_.size(); }
  std::size_t flat_index(int out, std::span<const int> idx) const;
  const FieldScalar& coeff(int out, std::span<const int> idx) const { return c_[flat_index(out, idx)]; }
  void set_coeff(int out, std::span<const int> idx, const FieldScalar& v);
  void add_coeff(int out, std::span<const int> idx, const FieldScalar& v);
  const Vec& raw() const { return c_; }
  Vec& raw() { return c_; }

  /// Multilinear contraction of the structure constants with the arguments.
  Vec eval(const std::vector<Vec>& args) const;

  bool is_zero() const { return is_zero_vec(c_); }
  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  MultiMap scaled(const FieldScalar& s) const;
  MultiMap operator-() const;
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend bool operator==(const MultiMap&, const MultiMap&) = default;

 private:
  int arity_ = 1, dom_ = 0, cod_ = 0;
  Field field_;
  Vec c_;
};

/// Iterates all tuples in [0,dim)^len in lexicographic order.
/// fn receives the current tuple as a const std::vector<int>&.
template <class F>
void for_each_index(int len, int dim, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(len), 0);
  if (dim <= 0 && len > 0) return;
  while (true) {
    fn(const_cast<const std::vector<int>&>(idx));
    int pos = len - 1;
    while (pos >= 0) {
      if (++idx[pos] < dim) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

/// A (p,q)-shuffle, 0-based: `first` and `second` partition {0,...,p+q-1},
/// each strictly increasing; `sign` is the permutation sign.
struct Shuffle {
  std::vector<int> first;
  std::vector<int> second;
  int sign = 1;
};

/// All (p,q)-shuffles, in lexicographic order of `first`. Signs come from the
/// inversion count between the two blocks.
std::vector<Shuffle> shuffles(int p, int q);

/// The insertion product f <> g of Balavoine's graded Lie bracket: for f of
/// arity m and g of arity n,
///   (f <> g)(x_1,...,x_{m+n-1}) =
///     sum_{i=1..m} (-1)^{(i-1)(n-1)} sum_{sigma in Sh(i-1,n-1)} (-1)^sigma
///       f(x_{sigma(1)},...,x_{sigma(i-1)},
///         g(x_{sigma(i)},...,x_{sigma(i+n-2)}, x_{i+n-1}),
///         x_{i+n},...,x_{m+n-1}).
/// The shuffles act on the first i+n-2 slots only; g's last argument and f's
/// trailing arguments are fixed. All inputs are degree-0 vectors, so the
/// Koszul sign is the ordinary permutation sign.
MultiMap diamond(const MultiMap& f, const MultiMap& g);

/// [[f,g]] = f <> g - (-1)^{(m-1)(n-1)} g <> f.
MultiMap balavoine_bracket(const MultiMap& f, const MultiMap& g);

/// Bidegree k|l of a map on a split space: G^{k+1,l} blocks land in g,
/// G^{k,l+1} blocks land in h, everything else vanishes. k,l >= -1 and
/// k + l = arity - 1.
struct Bidegree {
  int k = 0;
  int l = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// True iff f is supported on the k|l pattern only (the zero map qualifies
/// for every bidegree).
bool has_bidegree(const MultiMap& f, const SplitSpace& sp, Bidegree kl);

/// The unique pure bidegree of a nonzero map, or nullopt for mixed maps and
/// for the zero map (which has no unique pure bidegree).
std::optional<Bidegree> bidegree_of(const MultiMap& f, const SplitSpace& sp);

/// Splits f (arity n+1) into its bidegree components, k = n+1 down to -1.
/// The components sum back to f.
std::vector<std::pair<Bidegree, MultiMap>> bidegree_decompose(const MultiMap& f, const SplitSpace& sp);

enum class Part : std::uint8_t { G, H };
using Word = std::vector<Part>;

/// All words with g_count G-slots and h_count H-slots, lexicographic with
/// G < H. These index the ordered summands of G^{g_count, h_count}.
std::vector<Word> block_words(int g_count, int h_count);

/// Bilinear map A x B -> C on explicitly-sized spaces, dense c[out][a][b].
/// Used for the mixed-slot structure maps (actions and their duals) that a
/// uniform-domain MultiMap cannot carry.
struct Bilinear {
  int dim_a = 0, dim_b = 0, dim_out = 0;
  Field field;
  Vec c;

  static Bilinear zero(int dim_a, int dim_b, int dim_out, const Field& f);

  const FieldScalar& at(int out, int a, int b) const {
    return c[(std::size_t(out) * dim_a + a) * dim_b + b];
  }
  FieldScalar& at(int out, int a, int b) { return c[(std::size_t(out) * dim_a + a) * dim_b + b]; }
  Vec eval(const Vec& x, const Vec& y) const;
  bool is_zero() const { return is_zero_vec(c); }
  friend bool operator==(const Bilinear&, const Bilinear&) = default;
};

/// A block map c : G^{g_count, h_count} -> g (or h), given as one dense
/// coefficient array per ordered block summand, aligned with block_words.
/// Entry layout within a block: c[out][i_1]...[i_arity] with per-slot
/// dimensions dim_g or dim_h according to the word.
struct BlockMap {
  SplitSpace space;
  int g_count = 0, h_count = 0;
  bool to_g = true;
  std::vector<Vec> blocks;

  int arity() const { return g_count + h_count; }
  int out_dim() const { return to_g ? space.dim_g : space.dim_h; }
  std::size_t block_size(const Word& w) const;
  static BlockMap zero(const SplitSpace& sp, int g_count, int h_count, bool to_g);
};

/// The horizontal lift: agrees with the block map on its G^{k,l} blocks and
/// vanishes on all other blocks of the total tensor power.
MultiMap horizontal_lift(const BlockMap& bm);

/// Restriction of a square map on the total space to the given block
/// signature; horizontal_lift(restrict_blocks(f,...)) reproduces exactly the
/// entries of f living on that pattern.
BlockMap restrict_blocks(const MultiMap& f, const SplitSpace& sp, int g_count, int h_count, bool to_g);

/// Lift of a linear map r : h -> g (as a dim_g x dim_h matrix) to the total
/// space: r~(x, u) = (r(u), 0).
MultiMap lift_linear(const Matrix& r, const SplitSpace& sp);

/// Lift of an element of a_n = Hom(h^{tensor n+1}, g) to the total space.
MultiMap lift_a_element(const MultiMap& f, const SplitSpace& sp);

/// Restriction of a square map supported on C^{-1|n+1} back to
/// Hom(h^{tensor n+1}, g). Throws if f has support outside that pattern.
MultiMap restrict_a_element(const MultiMap& f, const SplitSpace& sp);

}  // namespace ptl
