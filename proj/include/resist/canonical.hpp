#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "resist/graph.hpp"

namespace resist {

/// Canonical forms are only computed up to this order.
inline constexpr std::size_t kCanonicalGuard = 16;

/// Upper-triangle adjacency bits of a canonically relabelled graph, column-major
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...). Codes order first by graph order, then
/// lexicographically by bitstring.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(std::size_t order, unsigned __int128 bits) : order_(order), bits_(bits) {}

  std::size_t order() const noexcept { return order_; }
  /// Bit k of the column-major bitstring lives at position 127 - k.
  unsigned __int128 bits() const noexcept { return bits_; }
  bool bit(std::size_t k) const noexcept { return (bits_ >> (127 - k)) & 1; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t order_ = 0;
  unsigned __int128 bits_ = 0;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    const auto hi = static_cast<std::uint64_t>(c.bits() >> 64);
    const auto lo = static_cast<std::uint64_t>(c.bits());
    return std::hash<std::uint64_t>{}(hi * 0x9E3779B97F4A7C15ull ^ lo ^ c.order());
  }
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// position[v]: index of original vertex v in the canonical graph.
  std::vector<VertexId> position;
  /// Orbit representative (smallest member) per vertex under the automorphisms the
  /// search discovered; vertices sharing a representative are genuinely equivalent.
  std::vector<VertexId> orbit;
};

/// Throws GuardError for order > 16.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);

/// Code of g under its own labeling; equals canonical_form(g) iff g is already canonical.
CanonicalCode adjacency_code(const Graph& g);

/// The graph a code describes (vertex i of the result is canonical position i).
Graph to_graph(const CanonicalCode& code);

/// g relabelled into canonical form.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// Applies `perm` (old id -> new id) to g.
Graph relabel(const Graph& g, const std::vector<VertexId>& perm);

}  // namespace resist
