#include "resist/resistance.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "elimination.hpp"
#include "resist/error.hpp"

namespace resist {

IntMatrix laplacian(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix l(n, n, 0);
  for (VertexId u = 0; u < n; ++u) {
    l(u, u) = static_cast<std::int64_t>(g.degree(u));
    for (auto v : g.neighbors(u)) l(u, v) = -1;
  }
  return l;
}

IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<VertexId>& drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  IntMatrix out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = m(keep[r], keep[c]);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  try {
    return BigInt(detail::bareiss_determinant(m));
  } catch (const detail::Overflow&) {
    return detail::bareiss_determinant(detail::convert<BigInt>(m));
  }
}

BigInt spanning_tree_count(const Graph& g) {
  return determinant(principal_submatrix(laplacian(g), {static_cast<VertexId>(g.order() - 1)}));
}

Rational resistance(const Graph& g, VertexId u, VertexId v) {
  if (u >= g.order() || v >= g.order()) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("resistance needs two distinct vertices");
  if (!is_connected(g)) throw InfiniteResistance();
  const IntMatrix l = laplacian(g);
  const BigInt trees = determinant(principal_submatrix(l, {u}));
  return Rational(determinant(principal_submatrix(l, {u, v})), trees);
}

ResistanceMatrix::ResistanceMatrix(std::size_t order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) throw InvalidArgument("resistance matrix size mismatch");
}

namespace {

template <class Int>
ResistanceMatrix matrix_from(const detail::ResistanceNumerators<Int>& rn, std::size_t n) {
  std::vector<Rational> entries(n * n);
  const BigInt den(rn.denominator);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      entries[u * n + v] = Rational(BigInt(rn.numerators(u, v)), den);
      entries[v * n + u] = entries[u * n + v];
    }
  return ResistanceMatrix(n, std::move(entries));
}

template <class Int>
ResistanceSpectrum spectrum_from(const detail::ResistanceNumerators<Int>& rn, std::size_t n) {
  std::vector<Int> nums;
  nums.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) nums.push_back(rn.numerators(u, v));
  std::sort(nums.begin(), nums.end());
  std::vector<SpectrumEntry> entries;
  const BigInt den(rn.denominator);
  for (std::size_t i = 0; i < nums.size();) {
    std::size_t j = i;
    while (j < nums.size() && nums[j] == nums[i]) ++j;
    entries.push_back({Rational(BigInt(nums[i]), den), j - i});
    i = j;
  }
  return ResistanceSpectrum::from_entries(std::move(entries));
}

// Dispatches to the 64-bit kernel and replays in BigInt on overflow.
template <class Fn>
auto with_numerators(const Graph& g, Fn&& fn) {
  if (!is_connected(g)) throw InfiniteResistance();
  const IntMatrix l = laplacian(g);
  try {
    if (auto rn = detail::resistance_numerators<std::int64_t>(l)) return fn(*rn);
  } catch (const detail::Overflow&) {
  }
  auto rn = detail::resistance_numerators<BigInt>(l);
  if (!rn) throw InfiniteResistance();
  return fn(*rn);
}

}  // namespace

ResistanceMatrix resistance_matrix(const Graph& g) {
  return with_numerators(g, [&](const auto& rn) { return matrix_from(rn, g.order()); });
}

ResistanceSpectrum resistance_spectrum(const Graph& g) {
  return with_numerators(g, [&](const auto& rn) { return spectrum_from(rn, g.order()); });
}

Rational resistance_diameter(const Graph& g) {
  const auto spectrum = resistance_spectrum(g);
  if (spectrum.empty()) throw InvalidArgument("resistance diameter of a single vertex is undefined");
  return spectrum.entries().back().value;
}

ResistanceSpectrum ResistanceSpectrum::from_entries(std::vector<SpectrumEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  ResistanceSpectrum out;
  for (auto& e : entries) {
    if (e.multiplicity == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().value == e.value)
      out.entries_.back().multiplicity += e.multiplicity;
    else
      out.entries_.push_back(std::move(e));
  }
  return out;
}

std::uint64_t ResistanceSpectrum::total_multiplicity() const noexcept {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool operator<(const ResistanceSpectrum& a, const ResistanceSpectrum& b) {
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(), [](const auto& x, const auto& y) {
        if (x.value != y.value) return x.value < y.value;
        return x.multiplicity < y.multiplicity;
      });
}

std::size_t SpectrumHash::operator()(const ResistanceSpectrum& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ull; };
  for (const auto& e : s.entries()) {
    mix(hash_value(e.value));
    mix(static_cast<std::size_t>(e.multiplicity));
  }
  return h;
}

std::string to_json(const ResistanceSpectrum& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : s.entries()) out.push_back({to_string(e.value), e.multiplicity});
  return out.dump();
}

ResistanceSpectrum spectrum_from_json(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid spectrum JSON: ") + e.what(), e.byte);
  }
  if (!parsed.is_array()) throw ParseError("spectrum JSON must be an array", 0);
  std::vector<SpectrumEntry> entries;
  for (const auto& item : parsed) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_number_unsigned())
      throw ParseError("spectrum entries must be [\"num/den\", multiplicity]", 0);
    SpectrumEntry e{parse_rational(item[0].get<std::string>()), item[1].get<std::uint64_t>()};
    if (e.multiplicity == 0) throw ParseError("zero multiplicity in spectrum", 0);
    if (!entries.empty() && !(entries.back().value < e.value))
      throw ParseError("spectrum values must be strictly ascending", 0);
    entries.push_back(std::move(e));
  }
  return ResistanceSpectrum::from_entries(std::move(entries));
}

ResistanceSpectrum kmn_spectrum_closed_form(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidArgument("complete bipartite parts must be non-empty");
  const Rational rm(m), rn(n);
  return ResistanceSpectrum::from_entries({
      {Rational(2) / rm, n * (n - 1) / 2},
      {1 / rm + 1 / rn - 1 / (rm * rn), m * n},
      {Rational(2) / rn, m * (m - 1) / 2},
  });
}

}  // namespace resist
