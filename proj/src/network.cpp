#include "resist/network.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "resist/error.hpp"

namespace resist {

WeightedNetwork::WeightedNetwork(std::size_t order, std::vector<WeightedEdge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ < 1) throw InvalidArgument("network needs at least one vertex");
  for (const auto& e : edges_) {
    if (e.u >= order_ || e.v >= order_) throw InvalidArgument("network edge endpoint out of range");
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.resistance <= 0) throw InvalidArgument("edge resistance must be positive, got " + to_string(e.resistance));
  }
}

WeightedNetwork WeightedNetwork::from_graph(const Graph& g) {
  std::vector<WeightedEdge> edges;
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v, Rational(1)});
  return WeightedNetwork(g.order(), std::move(edges));
}

std::vector<std::size_t> WeightedNetwork::incident(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
  return out;
}

bool WeightedNetwork::is_connected() const {
  std::vector<std::size_t> parent(order_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = order_;
  for (const auto& e : edges_) {
    const auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Rational series_combine(const Rational& a, const Rational& b) { return a + b; }

Rational parallel_combine(const Rational& a, const Rational& b) { return a * b / (a + b); }

Rational weighted_resistance(const WeightedNetwork& net, VertexId u, VertexId v) {
  const std::size_t n = net.order();
  if (u >= n || v >= n) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("resistance needs two distinct vertices");
  if (!net.is_connected()) throw InfiniteResistance();

  // Ground v and solve L' x = e_u on the remaining vertices; R = x_u.
  std::vector<std::size_t> index(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != v) index[i] = k++;
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1, Rational(0)));
  for (const auto& e : net.edges()) {
    const Rational c = 1 / e.resistance;
    const std::size_t iu = index[e.u], iv = index[e.v];
    if (iu < k) a[iu][iu] += c;
    if (iv < k) a[iv][iv] += c;
    if (iu < k && iv < k) {
      a[iu][iv] -= c;
      a[iv][iu] -= c;
    }
  }
  a[index[u]][k] = 1;

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) throw InfiniteResistance();
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return a[index[u]][k] / a[index[u]][index[u]];
}

WeightedNetwork series_reduce(const WeightedNetwork& net, VertexId v) {
  if (v >= net.order()) throw InvalidArgument("vertex out of range");
  const auto at = net.incident(v);
  if (at.size() != 2)
    throw InvalidArgument("series reduction needs exactly two edges at vertex " + std::to_string(v) + ", found " +
                          std::to_string(at.size()));
  const auto other = [&](const WeightedEdge& e) { return e.u == v ? e.v : e.u; };
  const WeightedEdge& e1 = net.edges()[at[0]];
  const WeightedEdge& e2 = net.edges()[at[1]];
  const VertexId a = other(e1), b = other(e2);
  if (a == b)
    throw InvalidArgument("series reduction at vertex " + std::to_string(v) +
                          ": both edges lead to the same neighbour (parallel pair, not a series chain)");

  auto shift = [v](VertexId x) { return x > v ? x - 1 : x; };
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < net.edges().size(); ++i) {
    if (i == at[0] || i == at[1]) continue;
    const auto& e = net.edges()[i];
    edges.push_back({shift(e.u), shift(e.v), e.resistance});
  }
  edges.push_back({shift(a), shift(b), series_combine(e1.resistance, e2.resistance)});
  return WeightedNetwork(net.order() - 1, std::move(edges));
}

WeightedNetwork parallel_reduce(const WeightedNetwork& net, VertexId u, VertexId v) {
  if (u >= net.order() || v >= net.order()) throw InvalidArgument("vertex out of range");
  std::vector<WeightedEdge> edges;
  std::size_t first = 0;
  std::size_t count = 0;
  Rational conductance = 0;
  for (const auto& e : net.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
      if (count++ == 0) {
        first = edges.size();
        edges.push_back(e);
      }
      conductance += 1 / e.resistance;
    } else {
      edges.push_back(e);
    }
  }
  if (count < 2)
    throw InvalidArgument("parallel reduction needs at least two edges between " + std::to_string(u) + " and " +
                          std::to_string(v) + ", found " + std::to_string(count));
  edges[first].resistance = 1 / conductance;
  return WeightedNetwork(net.order(), std::move(edges));
}

Graph eliminate_block(const Graph& g, const std::vector<VertexId>& block, VertexId w) {
  std::vector<VertexId> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto decomposition = blocks_and_cut_vertices(g);
  if (std::find(decomposition.blocks.begin(), decomposition.blocks.end(), sorted) == decomposition.blocks.end())
    throw InvalidArgument("vertex set is not a block of the graph");
  std::size_t cuts_in_block = 0;
  for (auto c : decomposition.cut_vertices)
    if (std::binary_search(sorted.begin(), sorted.end(), c)) ++cuts_in_block;
  const bool w_is_cut = std::binary_search(decomposition.cut_vertices.begin(), decomposition.cut_vertices.end(), w);
  if (!std::binary_search(sorted.begin(), sorted.end(), w) || !w_is_cut || cuts_in_block != 1)
    throw InvalidArgument("block must contain exactly one cut vertex, and it must be w=" + std::to_string(w) + " (found " +
                          std::to_string(cuts_in_block) + ")");
  std::vector<VertexId> doomed;
  for (auto x : sorted)
    if (x != w) doomed.push_back(x);
  return delete_vertices(g, doomed).graph;
}

WeightedNetwork induced_subnetwork(const WeightedNetwork& net, const std::vector<VertexId>& vertices) {
  std::vector<std::size_t> index(net.order(), net.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= net.order()) throw InvalidArgument("vertex out of range");
    if (index[vertices[i]] != net.order()) throw InvalidArgument("duplicate vertex in subset");
    index[vertices[i]] = i;
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : net.edges())
    if (index[e.u] < net.order() && index[e.v] < net.order())
      edges.push_back({static_cast<VertexId>(index[e.u]), static_cast<VertexId>(index[e.v]), e.resistance});
  return WeightedNetwork(vertices.size(), std::move(edges));
}

WeightedNetwork substitute(const WeightedNetwork& net, const std::vector<VertexId>& terminals,
                           const WeightedNetwork& replacement) {
  const WeightedNetwork original = induced_subnetwork(net, terminals);
  const std::size_t k = terminals.size();
  if (replacement.order() < k) throw InvalidArgument("replacement must contain every terminal");
  if (!original.is_connected()) throw InvalidArgument("substituted sub-network must be connected");
  if (!replacement.is_connected()) throw InvalidArgument("replacement network must be connected");
  for (VertexId a = 0; a < k; ++a)
    for (VertexId b = a + 1; b < k; ++b) {
      const Rational before = weighted_resistance(original, a, b);
      const Rational after = weighted_resistance(replacement, a, b);
      if (before != after)
        throw InvalidArgument("replacement is not terminal-equivalent: pair (" + std::to_string(terminals[a]) + ", " +
                              std::to_string(terminals[b]) + ") has resistance " + to_string(before) +
                              " in the original and " + to_string(after) + " in the replacement");
    }

  std::vector<bool> is_terminal(net.order(), false);
  for (auto t : terminals) is_terminal[t] = true;
  std::vector<WeightedEdge> edges;
  for (const auto& e : net.edges())
    if (!(is_terminal[e.u] && is_terminal[e.v])) edges.push_back(e);
  auto map = [&](VertexId x) {
    return x < k ? terminals[x] : static_cast<VertexId>(net.order() + (x - k));
  };
  for (const auto& e : replacement.edges()) edges.push_back({map(e.u), map(e.v), e.resistance});
  return WeightedNetwork(net.order() + replacement.order() - k, std::move(edges));
}

WeightedNetwork substitute(const Graph& g, const std::vector<VertexId>& terminals, const WeightedNetwork& replacement) {
  return substitute(WeightedNetwork::from_graph(g), terminals, replacement);
}

std::string format_network(const WeightedNetwork& net) {
  std::ostringstream out;
  out << net.order() << ' ' << net.edges().size() << '\n';
  for (const auto& e : net.edges()) out << e.u << ' ' << e.v << ' ' << to_string(e.resistance) << '\n';
  return out.str();
}

WeightedNetwork parse_network(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0) throw ParseError("network header must be \"n m\" with n >= 1", 0);
  std::vector<WeightedEdge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    std::string r;
    if (!(in >> u >> v >> r) || u < 0 || v < 0)
      throw ParseError("network edge line " + std::to_string(i + 1) + " must be \"u v num/den\"",
                       static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg())));
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), parse_rational(r)});
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after network edges", static_cast<std::size_t>(text.size()));
  return WeightedNetwork(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace resist
