#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resist/error.hpp"

namespace resist {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Largest order representable with a one-byte graph6 header and one bit-row word per vertex.
inline constexpr std::size_t kMaxOrder = 62;

/// Simple undirected graph on vertices 0..n-1. Immutable: every mutator returns a new value.
///
/// Each vertex owns a 64-bit neighbour mask, so edge tests and neighbourhood
/// intersections are single word operations.
class Graph {
 public:
  /// Throws InvalidArgument for n outside [1, 62], out-of-range endpoints or self-loops.
  /// Duplicate edges are stored once.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  /// Builds from neighbour masks; masks must be symmetric and loop-free.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept;  // edge count

  bool has_edge(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::uint64_t neighbor_mask(VertexId v) const;
  std::vector<Edge> edges() const;  // (u, v) with u < v, sorted

  Graph add_edge(VertexId u, VertexId v) const;     // throws EdgeAlreadyPresent if uv exists
  Graph delete_edge(VertexId u, VertexId v) const;  // throws InvalidArgument if uv is absent

  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}
  void check_vertex(VertexId v) const;

  std::vector<std::uint64_t> rows_;
};

/// Distinguishable signal for add_edge on an existing edge.
class EdgeAlreadyPresent : public InvalidArgument {
 public:
  EdgeAlreadyPresent(VertexId u, VertexId v);
};

/// Result of delete_vertices: the surviving graph and, per original vertex, its new id.
struct VertexDeletion {
  Graph graph;
  std::vector<std::optional<VertexId>> relabel;
};

/// Removes `doomed` and relabels survivors densely, preserving their relative order.
/// Deleting every vertex is rejected since graphs have order >= 1.
VertexDeletion delete_vertices(const Graph& g, const std::vector<VertexId>& doomed);

Graph complete_bipartite(std::size_t m, std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

bool is_connected(const Graph& g);

/// Vertex mask of the component containing `start`, ignoring vertices in `removed`.
std::uint64_t component_mask(const Graph& g, VertexId start, std::uint64_t removed = 0);

struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks;  // each sorted; list sorted lexicographically
  std::vector<VertexId> cut_vertices;         // sorted
};

/// Biconnected components and articulation points; g must be connected (InvalidArgument).
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// Whether removing v leaves the remaining vertices connected.
bool is_cut_vertex(const Graph& g, VertexId v);

/// If g is K_{m,n} (m <= n), returns {m, n}.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

/// graph6 interchange (no trailing newline in either direction). Orders up to 62.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace resist
