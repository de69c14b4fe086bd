#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resist/enumeration.hpp"
#include "resist/graph.hpp"
#include "resist/rational.hpp"
#include "resist/resistance.hpp"

namespace resist {

/// The general resistance identities and inequalities that the checks below exercise.
enum class LemmaId {
  kTriangle,       // R(u,v) + R(v,w) >= R(u,w)
  kFoster,         // sum over edges of R(u,v) = n - 1
  kLocalSum,       // d(u) R(u,v) + sum_{z in N(u)} (R(z,u) - R(z,v)) = 2
  kLowerBound,     // R(u,v) >= 1/(d(u)+1) + 1/(d(v)+1), equality iff adjacent twins
  kRayleigh,       // deleting an edge never decreases any resistance
  kCycleBound,     // an edge on a cycle has R < 1
  kCutAdditivity,  // R(u,v) = R(u,w) + R(w,v) when cut vertex w separates u and v
};

inline constexpr std::array kAllLemmas = {LemmaId::kTriangle,  LemmaId::kFoster,     LemmaId::kLocalSum,
                                          LemmaId::kLowerBound, LemmaId::kRayleigh,  LemmaId::kCycleBound,
                                          LemmaId::kCutAdditivity};

std::string_view lemma_name(LemmaId id);

/// A concrete violation: the graph, the vertices involved, and the two sides that
/// should have satisfied the relation.
struct Witness {
  Graph graph;
  std::vector<VertexId> vertices;
  Rational lhs;
  Rational rhs;
  std::string detail;
};

struct CheckReport {
  LemmaId lemma;
  bool passed = true;
  /// Nothing to compare (for example, deleting a bridge makes the resistance infinite).
  bool vacuous = false;
  std::optional<Witness> witness;  // present iff !passed
};

// Each check throws InvalidArgument for a disconnected graph. The overloads taking a
// ResistanceMatrix reuse a precomputed matrix of g.

CheckReport check_triangle(const Graph& g);
CheckReport check_triangle(const Graph& g, const ResistanceMatrix& r);

CheckReport check_foster(const Graph& g);
CheckReport check_foster(const Graph& g, const ResistanceMatrix& r);

CheckReport check_local_sum(const Graph& g, VertexId u, VertexId v);
CheckReport check_local_sum(const Graph& g, const ResistanceMatrix& r, VertexId u, VertexId v);

/// Checks the bound and both directions of its equality condition for every pair.
CheckReport check_lower_bound(const Graph& g);
CheckReport check_lower_bound(const Graph& g, const ResistanceMatrix& r);

/// Compares g - e against g on every pair; vacuous when e is a bridge.
/// Throws InvalidArgument when e is not an edge of g.
CheckReport check_rayleigh(const Graph& g, Edge e);
CheckReport check_rayleigh(const Graph& g, const ResistanceMatrix& r, Edge e);

CheckReport check_cycle_bound(const Graph& g);
CheckReport check_cycle_bound(const Graph& g, const ResistanceMatrix& r);

CheckReport check_cut_additivity(const Graph& g);
CheckReport check_cut_additivity(const Graph& g, const ResistanceMatrix& r);

struct LemmaTally {
  std::size_t passed = 0;
  std::size_t vacuous = 0;
  std::size_t failed = 0;
};

struct CheckSummary {
  std::size_t max_order = 0;
  std::vector<std::size_t> classes_per_order;  // index n-1
  std::array<LemmaTally, kAllLemmas.size()> tallies{};
  std::vector<CheckReport> failures;  // canonical graph order

  std::size_t graphs() const;
  std::size_t failure_count() const { return failures.size(); }
  const LemmaTally& tally(LemmaId id) const { return tallies[static_cast<std::size_t>(id)]; }
  /// Per-lemma counts and failure witnesses (graph6), deterministic byte-for-byte.
  std::string to_json() const;
};

/// Every check on every connected graph with 1 <= n <= max_order; local sums over all
/// ordered pairs and Rayleigh over all edges. Tallies count individual check reports.
CheckSummary run_all_checks(std::size_t max_order, const EnumerationOptions& options = {});

/// Folds one graph's reports into a summary (used by run_all_checks).
void run_checks_on(const Graph& g, CheckSummary& summary);

}  // namespace resist
