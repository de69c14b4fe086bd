#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "resist/graph.hpp"
#include "resist/rational.hpp"

namespace resist {

struct WeightedEdge {
  VertexId u;
  VertexId v;
  Rational resistance;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected multigraph of resistors. Parallel edges are allowed; self-loops and
/// non-positive resistances are not.
class WeightedNetwork {
 public:
  WeightedNetwork(std::size_t order, std::vector<WeightedEdge> edges);

  /// Unit resistor per edge of g.
  static WeightedNetwork from_graph(const Graph& g);

  std::size_t order() const noexcept { return order_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

  /// Indices into edges() of every edge incident to v.
  std::vector<std::size_t> incident(VertexId v) const;
  bool is_connected() const;

  friend bool operator==(const WeightedNetwork&, const WeightedNetwork&) = default;

 private:
  std::size_t order_;
  std::vector<WeightedEdge> edges_;
};

Rational series_combine(const Rational& a, const Rational& b);
Rational parallel_combine(const Rational& a, const Rational& b);

/// Effective resistance with conductance 1/r per edge. Throws InfiniteResistance when
/// the network is disconnected, InvalidArgument when u == v.
Rational weighted_resistance(const WeightedNetwork& net, VertexId u, VertexId v);

/// Replaces the two edges at v (to two distinct neighbours) with one edge of resistance
/// r1 + r2 and deletes v; vertex ids above v shift down by one.
WeightedNetwork series_reduce(const WeightedNetwork& net, VertexId v);

/// Replaces all (>= 2) u-v edges with one edge of resistance 1 / sum(1/r_k), kept at
/// the position of the first of them.
WeightedNetwork parallel_reduce(const WeightedNetwork& net, VertexId u, VertexId v);

/// g - (V(B) \ {w}) for a block B whose only cut vertex is w. Survivors keep their
/// relative order.
Graph eliminate_block(const Graph& g, const std::vector<VertexId>& block, VertexId w);

/// Sub-network on `vertices` (vertex i of the result is vertices[i]) with every edge
/// of net joining two of them.
WeightedNetwork induced_subnetwork(const WeightedNetwork& net, const std::vector<VertexId>& vertices);

/// Replaces the induced sub-network H on `terminals` with `replacement`, whose vertex i
/// stands for terminals[i] for i < |terminals| and whose remaining vertices are
/// appended as new vertices. H must be connected and the two must agree on every
/// terminal-pair resistance; otherwise InvalidArgument names the first violating pair.
WeightedNetwork substitute(const WeightedNetwork& net, const std::vector<VertexId>& terminals,
                           const WeightedNetwork& replacement);
WeightedNetwork substitute(const Graph& g, const std::vector<VertexId>& terminals, const WeightedNetwork& replacement);

/// Text form: "n m" then m lines "u v num/den".
std::string format_network(const WeightedNetwork& net);
WeightedNetwork parse_network(std::string_view text);

}  // namespace resist
