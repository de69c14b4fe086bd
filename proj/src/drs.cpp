#include "resist/drs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "resist/error.hpp"
#include "resist/parallel.hpp"

namespace resist {

std::string_view to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::kBalanced: return "Thm3.1";
    case TheoremTag::kNearlyBalanced: return "Thm3.2";
    case TheoremTag::kSmallPartTwo: return "Thm3.3";
    case TheoremTag::kLopsided: return "Thm3.4";
    case TheoremTag::kConjectureOnly: return "conjecture-only";
    case TheoremTag::kNotCompleteBipartite: return "not-complete-bipartite";
  }
  return "unknown";
}

TheoremTag classify_kmn(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidArgument("complete bipartite parts must be non-empty");
  const std::size_t small = std::min(m, n), large = std::max(m, n);
  if (small == large) return TheoremTag::kBalanced;
  if (large - small == 1) return TheoremTag::kNearlyBalanced;
  if (small == 2) return TheoremTag::kSmallPartTwo;
  if (large > 3 * small + 1) return TheoremTag::kLopsided;
  return TheoremTag::kConjectureOnly;
}

SpectrumIndex::SpectrumIndex(std::size_t order, std::vector<std::pair<CanonicalCode, ResistanceSpectrum>> classes)
    : order_(order), class_count_(classes.size()) {
  std::unordered_map<ResistanceSpectrum, std::vector<CanonicalCode>, SpectrumHash> grouped;
  for (auto& [code, spectrum] : classes) grouped[std::move(spectrum)].push_back(code);
  groups_.reserve(grouped.size());
  for (auto& [spectrum, members] : grouped) {
    std::sort(members.begin(), members.end());
    groups_.push_back({spectrum, std::move(members)});
  }
  std::sort(groups_.begin(), groups_.end(), [](const auto& a, const auto& b) { return a.spectrum < b.spectrum; });
  for (std::size_t i = 0; i < groups_.size(); ++i) lookup_.emplace(groups_[i].spectrum, i);
}

const SpectrumGroup* SpectrumIndex::find(const ResistanceSpectrum& s) const {
  const auto it = lookup_.find(s);
  return it == lookup_.end() ? nullptr : &groups_[it->second];
}

std::string format_spectrum_cache(const std::vector<std::pair<Graph, ResistanceSpectrum>>& rows) {
  std::string out;
  for (const auto& [g, s] : rows) out += to_graph6(g) + "\t" + to_json(s) + "\n";
  return out;
}

std::vector<std::pair<Graph, ResistanceSpectrum>> parse_spectrum_cache(const std::string& body) {
  std::vector<std::pair<Graph, ResistanceSpectrum>> rows;
  std::istringstream lines(body);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw CacheError("spectrum cache line " + std::to_string(number) + " has no tab");
    try {
      rows.emplace_back(parse_graph6(std::string_view(line).substr(0, tab)),
                        spectrum_from_json(std::string_view(line).substr(tab + 1)));
    } catch (const ParseError& e) {
      throw CacheError("spectrum cache line " + std::to_string(number) + ": " + e.what());
    }
  }
  return rows;
}

ResistanceSpectrum spectrum_by_determinants(const Graph& g) {
  std::vector<SpectrumEntry> entries;
  const auto n = static_cast<VertexId>(g.order());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) entries.push_back({resistance(g, u, v), 1});
  return ResistanceSpectrum::from_entries(std::move(entries));
}

DrsVerifier::DrsVerifier(DrsOptions options) : options_(std::move(options)) {
  check_enumeration_guard(options_.max_order, options_.allow_order_ten);
}

void DrsVerifier::check_order(std::size_t n) const {
  check_enumeration_guard(n, options_.allow_order_ten);
  if (n > options_.max_order)
    throw GuardError("order " + std::to_string(n) + " exceeds --max-n " + std::to_string(options_.max_order));
}

const SpectrumIndex& DrsVerifier::index(std::size_t n) {
  check_order(n);
  if (auto it = indexes_.find(n); it != indexes_.end()) return *it->second;

  std::optional<std::filesystem::path> file;
  if (options_.cache_dir) file = *options_.cache_dir / ("spectra-" + std::to_string(n) + ".tsv");

  std::vector<std::pair<Graph, ResistanceSpectrum>> rows;
  bool loaded = false;
  if (file) {
    if (std::ifstream in(*file, std::ios::binary); in) {
      std::ostringstream buffer;
      buffer << in.rdbuf();
      rows = parse_spectrum_cache(buffer.str());
      loaded = true;
    }
  }
  if (!loaded) {
    const EnumerationOptions enumeration{options_.threads, options_.allow_order_ten, options_.cache_dir};
    auto graphs = enumerate_connected(n, enumeration);
    auto spectra =
        parallel_map(graphs.size(), options_.threads, [&](std::size_t i) { return resistance_spectrum(graphs[i]); });
    rows.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) rows.emplace_back(std::move(graphs[i]), std::move(spectra[i]));
    if (file) {
      std::filesystem::create_directories(file->parent_path());
      const auto tmp = file->string() + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << format_spectrum_cache(rows);
        if (!out) throw CacheError("cannot write spectrum cache " + tmp);
      }
      std::filesystem::rename(tmp, *file);
    }
  }

  std::vector<std::pair<CanonicalCode, ResistanceSpectrum>> classes;
  classes.reserve(rows.size());
  for (auto& [g, s] : rows) {
    if (g.order() != n) throw CacheError("spectrum cache for order " + std::to_string(n) + " holds a graph of another order");
    classes.emplace_back(adjacency_code(g), std::move(s));
  }
  auto [it, inserted] = indexes_.emplace(n, std::make_unique<SpectrumIndex>(n, std::move(classes)));
  return *it->second;
}

DrsVerdict DrsVerifier::verify(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("verify_drs needs a connected graph (a disconnected graph has infinite resistances)");
  const std::size_t n = g.order();
  const SpectrumIndex& idx = index(n);

  DrsVerdict verdict{g, canonical_form(g), resistance_spectrum(g), TheoremTag::kNotCompleteBipartite,
                     complete_bipartite_parts(g), {}, idx.class_count()};
  if (verdict.parts) verdict.theorem_tag = classify_kmn(verdict.parts->first, verdict.parts->second);

  const SpectrumGroup* group = idx.find(verdict.spectrum);
  if (group == nullptr || !std::binary_search(group->members.begin(), group->members.end(), verdict.code))
    throw std::logic_error("target graph missing from its own spectrum group; enumeration is incomplete");
  for (const auto& c : group->members)
    if (c != verdict.code) verdict.impostors.push_back(c);
  return verdict;
}

std::vector<DrsVerdict> DrsVerifier::check_theorems(std::size_t max_order) {
  check_order(max_order);
  std::vector<DrsVerdict> out;
  for (std::size_t total = 2; total <= max_order; ++total)
    for (std::size_t m = 1; m <= total / 2; ++m) out.push_back(verify(complete_bipartite(m, total - m)));
  return out;
}

CollisionReport DrsVerifier::find_collisions(std::size_t n) {
  const SpectrumIndex& idx = index(n);
  CollisionReport report{n, idx.class_count(), idx.groups().size(), {}};
  for (const auto& group : idx.groups()) {
    if (group.members.size() < 2) continue;
    std::vector<Graph> graphs;
    for (const auto& c : group.members) graphs.push_back(to_graph(c));
    const auto recomputed = parallel_map(graphs.size(), options_.threads,
                                         [&](std::size_t i) { return spectrum_by_determinants(graphs[i]); });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (recomputed[i] != group.spectrum)
        throw std::logic_error("collision re-verification failed: spectrum mismatch for " + to_graph6(graphs[i]));
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        if (canonical_form(graphs[i]) == canonical_form(graphs[j]))
          throw std::logic_error("collision re-verification failed: isomorphic pair " + to_graph6(graphs[i]));
        report.pairs.push_back({group.members[i], group.members[j], group.spectrum});
      }
    }
  }
  return report;
}

SpectrumIndex index_spectra(std::size_t n, const DrsOptions& options) {
  DrsOptions local = options;
  local.max_order = std::max(local.max_order, n);
  DrsVerifier verifier(local);
  return verifier.index(n);
}

DrsVerdict verify_drs(const Graph& g, const DrsOptions& options) { return DrsVerifier(options).verify(g); }

std::vector<DrsVerdict> check_theorems(std::size_t max_order, const DrsOptions& options) {
  return DrsVerifier(options).check_theorems(max_order);
}

CollisionReport find_collisions(std::size_t n, const DrsOptions& options) {
  return DrsVerifier(options).find_collisions(n);
}

namespace {

using Json = nlohmann::ordered_json;

Json verdict_json(const DrsVerdict& v) {
  Json out;
  out["target"] = to_graph6(v.target);
  out["canonical"] = to_graph6(to_graph(v.code));
  out["order"] = v.target.order();
  out["kmn"] = v.parts ? Json::array({v.parts->first, v.parts->second}) : Json(nullptr);
  out["theorem_tag"] = to_string(v.theorem_tag);
  out["determined"] = v.determined();
  auto impostors = Json::array();
  for (const auto& c : v.impostors) impostors.push_back(to_graph6(to_graph(c)));
  out["impostors"] = impostors;
  out["spectrum"] = Json::parse(to_json(v.spectrum));
  out["classes_searched"] = v.classes_searched;
  out["search_scope"] =
      "all connected graphs on " + std::to_string(v.target.order()) +
      " vertices (a spectrum has C(n,2) entries, fixing n; finite entries force connectivity)";
  return out;
}

}  // namespace

std::string to_json(const DrsVerdict& verdict) { return verdict_json(verdict).dump(2); }

std::string to_json(const std::vector<DrsVerdict>& verdicts) {
  Json out;
  auto list = Json::array();
  for (const auto& v : verdicts) list.push_back(verdict_json(v));
  out["verdicts"] = list;
  out["theorem_cases_determined"] = theorem_exit_code(verdicts) == 0;
  return out.dump(2);
}

std::string to_json(const CollisionReport& report) {
  Json out;
  out["order"] = report.order;
  out["classes"] = report.classes;
  out["distinct_spectra"] = report.distinct_spectra;
  auto pairs = Json::array();
  for (const auto& p : report.pairs)
    pairs.push_back({{"a", to_graph6(to_graph(p.first))},
                     {"b", to_graph6(to_graph(p.second))},
                     {"spectrum", Json::parse(to_json(p.spectrum))}});
  out["pairs"] = pairs;
  return out.dump(2);
}

int theorem_exit_code(const std::vector<DrsVerdict>& verdicts) {
  for (const auto& v : verdicts)
    if (is_theorem_backed(v.theorem_tag) && !v.determined()) return 2;
  return 0;
}

}  // namespace resist
