#include "resist/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "resist/error.hpp"

namespace resist {

namespace {

constexpr std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::size_t check_order(std::size_t n) {
  if (n < 1 || n > kMaxOrder)
    throw InvalidArgument("graph order must be in [1, 62], got " + std::to_string(n));
  return n;
}

}  // namespace

EdgeAlreadyPresent::EdgeAlreadyPresent(VertexId u, VertexId v)
    : InvalidArgument("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present") {}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : rows_(check_order(n), 0) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v) +
                            " with n=" + std::to_string(n));
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  check_order(rows.size());
  const std::uint64_t valid = full_mask(rows.size());
  for (VertexId u = 0; u < rows.size(); ++u) {
    if (rows[u] & ~valid) throw InvalidArgument("neighbour mask references a vertex out of range");
    if (rows[u] & bit(u)) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    for (std::uint64_t m = rows[u]; m; m &= m - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(m));
      if (!(rows[v] & bit(u))) throw InvalidArgument("neighbour masks are not symmetric");
    }
  }
  return Graph(std::move(rows));
}

void Graph::check_vertex(VertexId v) const {
  if (v >= rows_.size())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(rows_.size()));
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] & bit(v)) != 0;
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

std::uint64_t Graph::neighbor_mask(VertexId v) const {
  check_vertex(v);
  return rows_[v];
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (std::uint64_t m = rows_[v]; m; m &= m - 1) out.push_back(static_cast<VertexId>(std::countr_zero(m)));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < rows_.size(); ++u)
    for (std::uint64_t m = rows_[u] & ~full_mask(u + 1); m; m &= m - 1)
      out.emplace_back(u, static_cast<VertexId>(std::countr_zero(m)));
  return out;
}

Graph Graph::add_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (rows_[u] & bit(v)) throw EdgeAlreadyPresent(u, v);
  auto rows = rows_;
  rows[u] |= bit(v);
  rows[v] |= bit(u);
  return Graph(std::move(rows));
}

Graph Graph::delete_edge(VertexId u, VertexId v) const {
  if (!has_edge(u, v)) throw InvalidArgument("no edge " + std::to_string(u) + "-" + std::to_string(v));
  auto rows = rows_;
  rows[u] &= ~bit(v);
  rows[v] &= ~bit(u);
  return Graph(std::move(rows));
}

VertexDeletion delete_vertices(const Graph& g, const std::vector<VertexId>& doomed) {
  const std::size_t n = g.order();
  std::uint64_t removed = 0;
  for (auto v : doomed) {
    if (v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    removed |= bit(v);
  }
  if (static_cast<std::size_t>(std::popcount(removed)) == n)
    throw InvalidArgument("cannot delete every vertex of a graph");

  std::vector<std::optional<VertexId>> relabel(n);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (!(removed & bit(v))) relabel[v] = next++;

  std::vector<std::uint64_t> rows(next, 0);
  for (VertexId u = 0; u < n; ++u) {
    if (!relabel[u]) continue;
    for (std::uint64_t m = g.rows()[u] & ~removed; m; m &= m - 1)
      rows[*relabel[u]] |= bit(*relabel[static_cast<VertexId>(std::countr_zero(m))]);
  }
  return {Graph::from_rows(std::move(rows)), std::move(relabel)};
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidArgument("complete bipartite parts must be non-empty");
  std::vector<Edge> edges;
  for (VertexId a = 0; a < m; ++a)
    for (VertexId b = 0; b < n; ++b) edges.emplace_back(a, static_cast<VertexId>(m + b));
  return Graph(m + n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::uint64_t component_mask(const Graph& g, VertexId start, std::uint64_t removed) {
  std::uint64_t seen = bit(start);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.rows()[std::countr_zero(m)];
    next &= ~seen & ~removed;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) { return component_mask(g, 0) == full_mask(g.order()); }

namespace {

int component_count(const Graph& g, std::uint64_t removed) {
  std::uint64_t left = full_mask(g.order()) & ~removed;
  int count = 0;
  while (left) {
    left &= ~component_mask(g, static_cast<VertexId>(std::countr_zero(left)), removed);
    ++count;
  }
  return count;
}

}  // namespace

bool is_cut_vertex(const Graph& g, VertexId v) {
  if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return component_count(g, bit(v)) > component_count(g, 0);
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("block decomposition requires a connected graph");
  const std::size_t n = g.order();
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back({0});
    return out;
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::uint64_t cuts = 0;
  int timer = 0;

  std::function<void(VertexId, int)> dfs = [&](VertexId u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (auto w : g.neighbors(u)) {
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, static_cast<int>(u));
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != -1 || children > 1) cuts |= bit(u);
          std::uint64_t members = 0;
          for (;;) {
            const Edge e = stack.back();
            stack.pop_back();
            members |= bit(e.first) | bit(e.second);
            if (e == Edge{u, w}) break;
          }
          std::vector<VertexId> block;
          for (std::uint64_t m = members; m; m &= m - 1) block.push_back(static_cast<VertexId>(std::countr_zero(m)));
          out.blocks.push_back(std::move(block));
        }
      } else if (static_cast<int>(w) != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end());
  for (std::uint64_t m = cuts; m; m &= m - 1) out.cut_vertices.push_back(static_cast<VertexId>(std::countr_zero(m)));
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  const std::uint64_t side_a = full_mask(n) & ~g.rows()[0];  // vertex 0's side: its non-neighbours
  const std::uint64_t side_b = g.rows()[0];
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t expected = (side_a & bit(v)) ? side_b : side_a;
    if (g.rows()[v] != expected) return std::nullopt;
  }
  std::size_t a = std::popcount(side_a), b = std::popcount(side_b);
  return std::pair{std::min(a, b), std::max(a, b)};
}

// graph6: one header byte n+63, then the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups offset by 63.

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      group = (group << 1) | ((g.rows()[j] >> i) & 1);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside printable range 63..126", i);
  }
  const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 126 - 63) throw ParseError("multi-byte graph6 length header (order > 62) is not supported", 0);
  if (n == 0) throw ParseError("graph6 order 0 is not a valid graph", 0);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw ParseError("graph6 string truncated", text.size());
  if (text.size() > 1 + body) throw ParseError("trailing garbage after graph6 data", 1 + body);

  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6) {
    const int last = static_cast<unsigned char>(text[body]) - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", body);
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace resist
