#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resist/canonical.hpp"
#include "resist/enumeration.hpp"
#include "resist/graph.hpp"
#include "resist/resistance.hpp"

namespace resist {

/// Which published determinability result covers K_{m,n}. The string forms are part
/// of the verdict JSON.
enum class TheoremTag {
  kBalanced,             // m = n                  "Thm3.1"
  kNearlyBalanced,       // |m - n| = 1            "Thm3.2"
  kSmallPartTwo,         // min(m, n) = 2          "Thm3.3"
  kLopsided,             // max > 3 min + 1        "Thm3.4"
  kConjectureOnly,       // none of the above      "conjecture-only"
  kNotCompleteBipartite  //                        "not-complete-bipartite"
};

std::string_view to_string(TheoremTag tag);

/// First matching rule in the order listed in TheoremTag. Throws InvalidArgument for a zero part.
TheoremTag classify_kmn(std::size_t m, std::size_t n);

inline bool is_theorem_backed(TheoremTag tag) {
  return tag != TheoremTag::kConjectureOnly && tag != TheoremTag::kNotCompleteBipartite;
}

struct SpectrumGroup {
  ResistanceSpectrum spectrum;
  std::vector<CanonicalCode> members;  // ascending
};

/// Every connected class on `order` vertices, partitioned by exact resistance spectrum.
class SpectrumIndex {
 public:
  SpectrumIndex(std::size_t order, std::vector<std::pair<CanonicalCode, ResistanceSpectrum>> classes);

  std::size_t order() const noexcept { return order_; }
  std::size_t class_count() const noexcept { return class_count_; }
  /// Ascending by spectrum.
  const std::vector<SpectrumGroup>& groups() const noexcept { return groups_; }
  const SpectrumGroup* find(const ResistanceSpectrum& s) const;

 private:
  std::size_t order_;
  std::size_t class_count_;
  std::vector<SpectrumGroup> groups_;
  std::unordered_map<ResistanceSpectrum, std::size_t, SpectrumHash> lookup_;
};

struct DrsOptions {
  unsigned threads = 1;
  bool allow_order_ten = false;
  /// Enumeration and spectrum caches ("connected-<n>.g6", "spectra-<n>.tsv").
  std::optional<std::filesystem::path> cache_dir;
  /// Largest order the caller is willing to sweep; must be within the enumeration guard.
  std::size_t max_order = kEnumerationGuard;
};

struct DrsVerdict {
  Graph target;
  CanonicalCode code;
  ResistanceSpectrum spectrum;
  TheoremTag theorem_tag;
  std::optional<std::pair<std::size_t, std::size_t>> parts;  // (m, n) when complete bipartite, m <= n
  std::vector<CanonicalCode> impostors;                      // same spectrum, not isomorphic
  std::size_t classes_searched = 0;

  bool determined() const noexcept { return impostors.empty(); }
};

struct CollisionPair {
  CanonicalCode first;
  CanonicalCode second;
  ResistanceSpectrum spectrum;
};

struct CollisionReport {
  std::size_t order;
  std::size_t classes = 0;
  std::size_t distinct_spectra = 0;
  std::vector<CollisionPair> pairs;
};

/// Spectrum cache body: one "graph6<TAB>spectrum-json" line per class, canonical order.
std::string format_spectrum_cache(const std::vector<std::pair<Graph, ResistanceSpectrum>>& rows);
std::vector<std::pair<Graph, ResistanceSpectrum>> parse_spectrum_cache(const std::string& body);

/// Resistance spectrum recomputed pair by pair from determinant ratios, independent of
/// the shared-inverse route used for indexing.
ResistanceSpectrum spectrum_by_determinants(const Graph& g);

/// Holds one SpectrumIndex per order so repeated verdicts reuse the sweep.
class DrsVerifier {
 public:
  explicit DrsVerifier(DrsOptions options = {});

  const DrsOptions& options() const noexcept { return options_; }

  /// Builds (or loads from cache) the index for connected graphs on n vertices.
  const SpectrumIndex& index(std::size_t n);

  /// Impostors are searched among connected graphs of the same order only: a spectrum
  /// lists C(n,2) values, which fixes n, and finite values force connectivity.
  DrsVerdict verify(const Graph& g);

  /// verify(K_{m,n}) for every 2 <= m + n <= max_order, ordered by (m + n, m).
  std::vector<DrsVerdict> check_theorems(std::size_t max_order);

  /// All non-isomorphic pairs sharing a spectrum; each pair is re-verified from scratch.
  CollisionReport find_collisions(std::size_t n);

 private:
  void check_order(std::size_t n) const;

  DrsOptions options_;
  std::map<std::size_t, std::unique_ptr<SpectrumIndex>> indexes_;
};

SpectrumIndex index_spectra(std::size_t n, const DrsOptions& options = {});
DrsVerdict verify_drs(const Graph& g, const DrsOptions& options = {});
std::vector<DrsVerdict> check_theorems(std::size_t max_order, const DrsOptions& options = {});
CollisionReport find_collisions(std::size_t n, const DrsOptions& options = {});

/// Verdict JSON: target graph6, order, parts, theorem_tag, determined, impostor graph6
/// list, spectrum and the number of classes searched.
std::string to_json(const DrsVerdict& verdict);
std::string to_json(const std::vector<DrsVerdict>& verdicts);
std::string to_json(const CollisionReport& report);

/// 0 when every theorem-backed verdict is determined, 2 otherwise.
int theorem_exit_code(const std::vector<DrsVerdict>& verdicts);

}  // namespace resist
