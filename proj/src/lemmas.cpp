#include "resist/lemmas.hpp"

#include <nlohmann/json.hpp>

#include "resist/error.hpp"
#include "resist/parallel.hpp"

namespace resist {

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::kTriangle: return "triangle";
    case LemmaId::kFoster: return "foster";
    case LemmaId::kLocalSum: return "local_sum";
    case LemmaId::kLowerBound: return "lower_bound";
    case LemmaId::kRayleigh: return "rayleigh";
    case LemmaId::kCycleBound: return "cycle_bound";
    case LemmaId::kCutAdditivity: return "cut_additivity";
  }
  return "unknown";
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("lemma checks require a connected graph");
}

CheckReport pass(LemmaId id) { return CheckReport{id, true, false, std::nullopt}; }
CheckReport vacuous(LemmaId id) { return CheckReport{id, true, true, std::nullopt}; }

CheckReport fail(LemmaId id, const Graph& g, std::vector<VertexId> vertices, Rational lhs, Rational rhs,
                 std::string detail) {
  return CheckReport{id, false, false, Witness{g, std::move(vertices), std::move(lhs), std::move(rhs), std::move(detail)}};
}

}  // namespace

CheckReport check_triangle(const Graph& g) {
  require_connected(g);
  return check_triangle(g, resistance_matrix(g));
}

CheckReport check_triangle(const Graph& g, const ResistanceMatrix& r) {
  const auto n = static_cast<VertexId>(g.order());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = 0; w < n; ++w) {
        if (u == v || v == w || u == w) continue;
        Rational lhs = r(u, v) + r(v, w);
        if (lhs < r(u, w))
          return fail(LemmaId::kTriangle, g, {u, v, w}, std::move(lhs), r(u, w), "R(u,v)+R(v,w) < R(u,w)");
      }
  return pass(LemmaId::kTriangle);
}

CheckReport check_foster(const Graph& g) {
  require_connected(g);
  return check_foster(g, resistance_matrix(g));
}

CheckReport check_foster(const Graph& g, const ResistanceMatrix& r) {
  Rational sum = 0;
  for (const auto& [u, v] : g.edges()) sum += r(u, v);
  const Rational expected(g.order() - 1);
  if (sum != expected) return fail(LemmaId::kFoster, g, {}, std::move(sum), expected, "sum of edge resistances != n-1");
  return pass(LemmaId::kFoster);
}

CheckReport check_local_sum(const Graph& g, VertexId u, VertexId v) {
  require_connected(g);
  return check_local_sum(g, resistance_matrix(g), u, v);
}

CheckReport check_local_sum(const Graph& g, const ResistanceMatrix& r, VertexId u, VertexId v) {
  if (u >= g.order() || v >= g.order()) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("local sum needs two distinct vertices");
  Rational lhs = Rational(g.degree(u)) * r(u, v);
  for (auto z : g.neighbors(u)) lhs += r(z, u) - r(z, v);
  if (lhs != 2) return fail(LemmaId::kLocalSum, g, {u, v}, std::move(lhs), Rational(2), "local sum != 2");
  return pass(LemmaId::kLocalSum);
}

CheckReport check_lower_bound(const Graph& g) {
  require_connected(g);
  return check_lower_bound(g, resistance_matrix(g));
}

CheckReport check_lower_bound(const Graph& g, const ResistanceMatrix& r) {
  const auto n = static_cast<VertexId>(g.order());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const Rational bound = Rational(1, g.degree(u) + 1) + Rational(1, g.degree(v) + 1);
      if (r(u, v) < bound) return fail(LemmaId::kLowerBound, g, {u, v}, r(u, v), bound, "R(u,v) below degree bound");
      const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      const bool twins =
          g.has_edge(u, v) && (g.neighbor_mask(u) & ~pair) == (g.neighbor_mask(v) & ~pair);
      const bool tight = r(u, v) == bound;
      if (tight && !twins)
        return fail(LemmaId::kLowerBound, g, {u, v}, r(u, v), bound,
                    "bound attained but u,v are not adjacent with equal neighbourhoods");
      if (twins && !tight)
        return fail(LemmaId::kLowerBound, g, {u, v}, r(u, v), bound,
                    "u,v adjacent with equal neighbourhoods but bound not attained");
    }
  return pass(LemmaId::kLowerBound);
}

CheckReport check_rayleigh(const Graph& g, Edge e) {
  require_connected(g);
  return check_rayleigh(g, resistance_matrix(g), e);
}

CheckReport check_rayleigh(const Graph& g, const ResistanceMatrix& r, Edge e) {
  if (!g.has_edge(e.first, e.second))
    throw InvalidArgument("not an edge: " + std::to_string(e.first) + "-" + std::to_string(e.second));
  const Graph smaller = g.delete_edge(e.first, e.second);
  if (!is_connected(smaller)) return vacuous(LemmaId::kRayleigh);
  const ResistanceMatrix after = resistance_matrix(smaller);
  const auto n = static_cast<VertexId>(g.order());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (after(u, v) < r(u, v))
        return fail(LemmaId::kRayleigh, g, {u, v, e.first, e.second}, after(u, v), r(u, v),
                    "resistance decreased after deleting edge");
  return pass(LemmaId::kRayleigh);
}

CheckReport check_cycle_bound(const Graph& g) {
  require_connected(g);
  return check_cycle_bound(g, resistance_matrix(g));
}

CheckReport check_cycle_bound(const Graph& g, const ResistanceMatrix& r) {
  bool any_cycle_edge = false;
  for (const auto& [u, v] : g.edges()) {
    if (!is_connected(g.delete_edge(u, v))) continue;
    any_cycle_edge = true;
    if (r(u, v) >= 1)
      return fail(LemmaId::kCycleBound, g, {u, v}, r(u, v), Rational(1), "edge on a cycle has R >= 1");
  }
  return any_cycle_edge ? pass(LemmaId::kCycleBound) : vacuous(LemmaId::kCycleBound);
}

CheckReport check_cut_additivity(const Graph& g) {
  require_connected(g);
  return check_cut_additivity(g, resistance_matrix(g));
}

CheckReport check_cut_additivity(const Graph& g, const ResistanceMatrix& r) {
  const auto n = static_cast<VertexId>(g.order());
  bool any_cut = false;
  for (VertexId w = 0; w < n; ++w) {
    if (!is_cut_vertex(g, w)) continue;
    any_cut = true;
    const std::uint64_t removed = std::uint64_t{1} << w;
    for (VertexId u = 0; u < n; ++u) {
      if (u == w) continue;
      const std::uint64_t side = component_mask(g, u, removed);
      for (VertexId v = u + 1; v < n; ++v) {
        if (v == w || (side >> v & 1)) continue;
        Rational rhs = r(u, w) + r(w, v);
        if (r(u, v) != rhs)
          return fail(LemmaId::kCutAdditivity, g, {u, v, w}, r(u, v), std::move(rhs),
                      "R(u,v) != R(u,w)+R(w,v) across cut vertex w");
      }
    }
  }
  return any_cut ? pass(LemmaId::kCutAdditivity) : vacuous(LemmaId::kCutAdditivity);
}

namespace {

void tally(CheckSummary& summary, CheckReport report) {
  auto& t = summary.tallies[static_cast<std::size_t>(report.lemma)];
  if (!report.passed) {
    ++t.failed;
    summary.failures.push_back(std::move(report));
  } else if (report.vacuous) {
    ++t.vacuous;
  } else {
    ++t.passed;
  }
}

}  // namespace

void run_checks_on(const Graph& g, CheckSummary& summary) {
  require_connected(g);
  const ResistanceMatrix r = resistance_matrix(g);
  tally(summary, check_triangle(g, r));
  tally(summary, check_foster(g, r));
  const auto n = static_cast<VertexId>(g.order());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) tally(summary, check_local_sum(g, r, u, v));
  tally(summary, check_lower_bound(g, r));
  for (const auto& e : g.edges()) tally(summary, check_rayleigh(g, r, e));
  tally(summary, check_cycle_bound(g, r));
  tally(summary, check_cut_additivity(g, r));
}

std::size_t CheckSummary::graphs() const {
  std::size_t total = 0;
  for (auto c : classes_per_order) total += c;
  return total;
}

std::string CheckSummary::to_json() const {
  nlohmann::ordered_json out;
  out["max_n"] = max_order;
  out["classes_per_order"] = classes_per_order;
  out["graphs"] = graphs();
  out["failures"] = failure_count();
  nlohmann::ordered_json lemmas;
  for (auto id : kAllLemmas) {
    const auto& t = tally(id);
    lemmas[std::string(lemma_name(id))] = {{"passed", t.passed}, {"vacuous", t.vacuous}, {"failed", t.failed}};
  }
  out["lemmas"] = lemmas;
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    const auto& w = *f.witness;
    witnesses.push_back({{"lemma", lemma_name(f.lemma)},
                         {"graph6", to_graph6(w.graph)},
                         {"vertices", w.vertices},
                         {"lhs", to_string(w.lhs)},
                         {"rhs", to_string(w.rhs)},
                         {"detail", w.detail}});
  }
  out["witnesses"] = witnesses;
  return out.dump(2);
}

CheckSummary run_all_checks(std::size_t max_order, const EnumerationOptions& options) {
  CheckSummary summary;
  summary.max_order = max_order;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto graphs = enumerate_connected(n, options);
    summary.classes_per_order.push_back(graphs.size());
    auto partial = parallel_map(graphs.size(), options.threads, [&](std::size_t i) {
      CheckSummary one;
      run_checks_on(graphs[i], one);
      return one;
    });
    for (auto& p : partial) {
      for (std::size_t k = 0; k < p.tallies.size(); ++k) {
        summary.tallies[k].passed += p.tallies[k].passed;
        summary.tallies[k].vacuous += p.tallies[k].vacuous;
        summary.tallies[k].failed += p.tallies[k].failed;
      }
      for (auto& f : p.failures) summary.failures.push_back(std::move(f));
    }
  }
  return summary;
}

}  // namespace resist
