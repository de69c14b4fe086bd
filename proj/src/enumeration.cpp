#include "resist/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "resist/error.hpp"
#include "resist/parallel.hpp"

namespace resist {

void check_enumeration_guard(std::size_t n, bool allow_order_ten) {
  const std::size_t limit = allow_order_ten ? kEnumerationHardLimit : kEnumerationGuard;
  if (n < 1 || n > limit)
    throw GuardError("enumeration order must be in [1, " + std::to_string(limit) + "], got " + std::to_string(n) +
                     (n == kEnumerationHardLimit ? " (order 10 needs an explicit override)" : ""));
}

namespace {

// Children of one parent that pass the canonical-parent test, deduplicated.
std::vector<CanonicalCode> children_of(const Graph& parent) {
  const std::size_t n = parent.order() + 1;
  const auto v = static_cast<VertexId>(n - 1);
  const CanonicalCode parent_code = canonical_form(parent);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  std::vector<CanonicalCode> accepted;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
    std::vector<std::uint64_t> rows = parent.rows();
    rows.push_back(s);
    for (std::uint64_t m = s; m; m &= m - 1) rows[std::countr_zero(m)] |= std::uint64_t{1} << v;
    const Graph child = Graph::from_rows(std::move(rows));

    // Canonical deletion vertex: a non-cut vertex of minimum degree, ties broken by the
    // largest canonical position. The new vertex is never a cut vertex.
    const auto d = static_cast<std::size_t>(std::popcount(s));
    std::uint64_t non_cut = std::uint64_t{1} << v;
    bool feasible = true;
    for (VertexId x = 0; x < v && feasible; ++x) {
      const std::uint64_t removed = std::uint64_t{1} << x;
      const VertexId probe = x == 0 ? 1 : 0;
      if (component_mask(child, probe, removed) == (all & ~removed)) {
        non_cut |= removed;
        feasible = child.degree(x) >= d;
      }
    }
    if (!feasible) continue;

    const CanonicalLabeling labeling = canonical_labeling(child);
    VertexId chosen = v;
    for (std::uint64_t m = non_cut; m; m &= m - 1) {
      const auto x = static_cast<VertexId>(std::countr_zero(m));
      if (child.degree(x) == d && labeling.position[x] > labeling.position[chosen]) chosen = x;
    }
    const bool is_canonical_parent = chosen == v || labeling.orbit[chosen] == labeling.orbit[v] ||
                                     canonical_form(delete_vertices(child, {chosen}).graph) == parent_code;
    if (is_canonical_parent) accepted.push_back(labeling.code);
  }
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());
  return accepted;
}

}  // namespace

std::vector<Graph> augment_level(const std::vector<Graph>& parents, unsigned threads) {
  const auto per_parent = parallel_map(parents.size(), threads, [&](std::size_t i) { return children_of(parents[i]); });
  std::vector<CanonicalCode> codes;
  for (const auto& list : per_parent) codes.insert(codes.end(), list.begin(), list.end());
  std::sort(codes.begin(), codes.end());
  if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
    throw std::logic_error("canonical augmentation produced a duplicate class");
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(to_graph(c));
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string format_cache(const std::vector<Graph>& graphs) {
  std::string body;
  for (const auto& g : graphs) body += to_graph6(g) + "\n";
  char trailer[32];
  std::snprintf(trailer, sizeof trailer, "#fnv1a64 %016llx\n", static_cast<unsigned long long>(fnv1a64(body)));
  return body + trailer;
}

std::vector<Graph> parse_cache(const std::string& body) {
  const auto trailer_at = body.rfind("#fnv1a64 ");
  if (trailer_at == std::string::npos || (trailer_at > 0 && body[trailer_at - 1] != '\n'))
    throw CacheError("cache file has no checksum trailer");
  const std::string payload = body.substr(0, trailer_at);
  std::string digest = body.substr(trailer_at + 9);
  while (!digest.empty() && (digest.back() == '\n' || digest.back() == '\r')) digest.pop_back();
  char expected[17];
  std::snprintf(expected, sizeof expected, "%016llx", static_cast<unsigned long long>(fnv1a64(payload)));
  if (digest != expected) throw CacheError("cache checksum mismatch");

  std::vector<Graph> out;
  std::istringstream lines(payload);
  std::string line;
  while (std::getline(lines, line)) {
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw CacheError(std::string("corrupt cache line: ") + e.what());
    }
  }
  return out;
}

std::optional<std::filesystem::path> default_cache_dir() {
  const char* env = std::getenv("RESIST_CACHE_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

namespace {

std::optional<std::vector<Graph>> load_cached_level(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_cache(buffer.str());
  } catch (const CacheError& e) {
    throw CacheError(file.string() + ": " + e.what());
  }
}

void store_level(const std::filesystem::path& file, const std::vector<Graph>& graphs) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << format_cache(graphs);
    if (!out) throw CacheError("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace

std::vector<Graph> enumerate_connected(std::size_t n, const EnumerationOptions& options) {
  check_enumeration_guard(n, options.allow_order_ten);
  std::optional<std::filesystem::path> file;
  if (options.cache_dir) {
    file = *options.cache_dir / ("connected-" + std::to_string(n) + ".g6");
    if (auto cached = load_cached_level(*file)) return std::move(*cached);
  }
  std::vector<Graph> level = n == 1 ? std::vector<Graph>{Graph(1, {})}
                                    : augment_level(enumerate_connected(n - 1, options), options.threads);
  if (file) store_level(*file, level);
  return level;
}

}  // namespace resist
