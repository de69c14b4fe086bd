#include "resist/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "resist/error.hpp"

namespace resist {

namespace {

using Bits = unsigned __int128;
using Labels = std::array<std::uint8_t, kCanonicalGuard>;

constexpr std::size_t bit_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

constexpr Bits top_bit(std::size_t k) { return Bits{1} << (127 - k); }

class UnionFind {
 public:
  explicit UnionFind(int n) { std::iota(parent_.begin(), parent_.begin() + n, std::uint8_t{0}); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent_[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
  }

 private:
  Labels parent_{};
};

// Branch-and-bound over vertex orderings for the least column-major code. Placing
// vertex w at position k fixes column k (its adjacency to the k earlier vertices), so
// only the candidates with the least column can lead to the minimum. Prunes by code
// prefix against the best leaf, by orbits of known automorphisms fixing the placed
// vertices (seeded with twin transpositions), and by jumping back to the common
// ancestor whenever a leaf reproduces the first or best leaf.
class Searcher {
 public:
  explicit Searcher(const Graph& g) : n_(static_cast<int>(g.order())) {
    for (int v = 0; v < n_; ++v) adj_[v] = static_cast<std::uint32_t>(g.rows()[v]);
    // u, v with N(u) - v == N(v) - u: swapping them is an automorphism
    std::uint32_t seen = 0;
    for (int u = 0; u < n_; ++u) {
      if (seen >> u & 1) continue;
      int prev = u;
      for (int v = u + 1; v < n_; ++v) {
        if ((adj_[u] & ~(1u << v)) != (adj_[v] & ~(1u << u))) continue;
        Labels swap{};
        std::iota(swap.begin(), swap.begin() + n_, std::uint8_t{0});
        std::swap(swap[prev], swap[v]);
        generators_.push_back(swap);
        seen |= 1u << v;
        prev = v;
      }
    }
  }

  CanonicalLabeling run() {
    search(0, 0, 0);

    CanonicalLabeling out;
    out.code = CanonicalCode(static_cast<std::size_t>(n_), best_.code);
    out.position.resize(n_);
    for (int p = 0; p < n_; ++p) out.position[best_.lab[p]] = static_cast<VertexId>(p);
    UnionFind uf(n_);
    for (const auto& gen : generators_)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = static_cast<VertexId>(uf.find(v));
    return out;
  }

 private:
  struct Leaf {
    Bits code = 0;
    Labels lab{};
  };

  // Column of w against the placed prefix, first placed vertex most significant.
  std::uint32_t column(int w, int depth) const {
    std::uint32_t col = 0;
    for (int i = 0; i < depth; ++i) col = (col << 1) | (adj_[w] >> path_[i] & 1);
    return col;
  }

  static int common_prefix(const Labels& a, const Labels& b, int depth) {
    int i = 0;
    while (i < depth && a[i] == b[i]) ++i;
    return i;
  }

  void record_automorphism(const Labels& from, const Labels& to) {
    Labels gen{};
    for (int p = 0; p < n_; ++p) gen[from[p]] = to[p];
    generators_.push_back(gen);
  }

  // Returns the depth of the deepest ancestor that should continue exploring.
  int leaf(Bits code) {
    Leaf here{code, path_};
    if (!have_first_) {
      first_ = best_ = here;
      have_first_ = true;
      return n_ - 1;
    }
    if (code == first_.code) {
      record_automorphism(first_.lab, here.lab);
      return common_prefix(path_, first_.lab, n_);
    }
    if (code < best_.code) {
      best_ = here;
      return n_ - 1;
    }
    if (code == best_.code) {
      record_automorphism(best_.lab, here.lab);
      return common_prefix(path_, best_.lab, n_);
    }
    return n_ - 1;
  }

  std::uint32_t orbit_mask(int depth, int w) const {
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      bool fixes_path = true;
      for (int i = 0; i < depth && fixes_path; ++i) fixes_path = gen[path_[i]] == path_[i];
      if (!fixes_path) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    std::uint32_t mask = 0;
    const int root = uf.find(w);
    for (int v = 0; v < n_; ++v)
      if (uf.find(v) == root) mask |= 1u << v;
    return mask;
  }

  // depth vertices are placed (path_[0..depth)), `used` is their mask and `code`
  // holds columns 1..depth-1.
  int search(int depth, std::uint32_t used, Bits code) {
    if (depth == n_) return leaf(code);

    std::uint32_t least = ~0u, candidates = 0;
    for (int w = 0; w < n_; ++w) {
      if (used >> w & 1) continue;
      const std::uint32_t col = column(w, depth);
      if (col < least) least = col, candidates = 0;
      if (col == least) candidates |= 1u << w;
    }
    Bits next = code;
    for (int i = 0; i < depth; ++i)
      if (least >> (depth - 1 - i) & 1) next |= top_bit(bit_index(i, depth));
    if (have_first_ && depth >= 1) {
      const int shift = 128 - static_cast<int>(bit_index(0, depth + 1));
      const Bits mine = next >> shift, theirs = best_.code >> shift;
      if (mine > theirs) return depth - 1;
    }

    std::uint32_t explored = 0;
    for (std::uint32_t m = candidates; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (explored && (orbit_mask(depth, w) & explored)) continue;
      path_[depth] = static_cast<std::uint8_t>(w);
      const int resume = search(depth + 1, used | 1u << w, next);
      explored |= 1u << w;
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  int n_;
  std::array<std::uint32_t, kCanonicalGuard> adj_{};
  Labels path_{};
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Labels> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalGuard)
    throw GuardError("canonical form supports at most 16 vertices, got " + std::to_string(g.order()));
  return Searcher(g).run();
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

CanonicalCode adjacency_code(const Graph& g) {
  if (g.order() > kCanonicalGuard)
    throw GuardError("canonical codes support at most 16 vertices, got " + std::to_string(g.order()));
  Bits bits = 0;
  for (std::size_t j = 1; j < g.order(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.rows()[j] >> i & 1) bits |= top_bit(bit_index(i, j));
  return CanonicalCode(g.order(), bits);
}

Graph to_graph(const CanonicalCode& code) {
  const std::size_t n = code.order();
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code.bit(bit_index(i, j))) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
  return Graph::from_rows(std::move(rows));
}

Graph canonical_graph(const Graph& g) { return to_graph(canonical_form(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) {
    if (g.order() > kCanonicalGuard || h.order() > kCanonicalGuard)
      throw GuardError("canonical form supports at most 16 vertices");
    return false;
  }
  return canonical_form(g) == canonical_form(h);
}

Graph relabel(const Graph& g, const std::vector<VertexId>& perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InvalidArgument("permutation size does not match graph order");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (VertexId u = 0; u < n; ++u)
    for (auto v : g.neighbors(u)) rows[perm[u]] |= std::uint64_t{1} << perm[v];
  return Graph::from_rows(std::move(rows));
}

}  // namespace resist
