#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "resist/canonical.hpp"
#include "resist/graph.hpp"

namespace resist {

inline constexpr std::size_t kEnumerationGuard = 9;
inline constexpr std::size_t kEnumerationHardLimit = 10;

struct EnumerationOptions {
  unsigned threads = 1;
  bool allow_order_ten = false;
  /// When set, levels are read from / written to "connected-<n>.g6" in this directory.
  std::optional<std::filesystem::path> cache_dir;
};

/// Throws GuardError unless 1 <= n <= 9 (or n == 10 with allow_order_ten).
void check_enumeration_guard(std::size_t n, bool allow_order_ten);

/// One canonical representative per isomorphism class of connected graphs on n
/// vertices, ascending by canonical code. Built by canonical augmentation from level n-1.
std::vector<Graph> enumerate_connected(std::size_t n, const EnumerationOptions& options = {});

/// One augmentation step: all connected children of the given canonical (n-1)-vertex
/// representatives, one per class, ascending by code.
std::vector<Graph> augment_level(const std::vector<Graph>& parents, unsigned threads = 1);

/// Cache file body for a level: graph6 lines, then "#fnv1a64 <hex>" over those bytes.
std::string format_cache(const std::vector<Graph>& graphs);

/// Inverse of format_cache. Throws CacheError on checksum or format mismatch.
std::vector<Graph> parse_cache(const std::string& body);

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// Directory named by RESIST_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace resist
