#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "resist/graph.hpp"
#include "resist/rational.hpp"

namespace resist {

/// Dense row-major matrix; just enough structure for exact elimination.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// L = D - A.
IntMatrix laplacian(const Graph& g);

/// Square submatrix keeping every row/column not listed in `drop`.
IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<VertexId>& drop);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Runs in 64-bit arithmetic while every intermediate fits and switches to BigInt otherwise.
BigInt determinant(const IntMatrix& m);

/// Matrix-Tree count: determinant of the Laplacian with its last row/column removed.
BigInt spanning_tree_count(const Graph& g);

/// Effective resistance det(L without {u,v}) / det(L without u).
/// Throws InfiniteResistance when g is disconnected and InvalidArgument when u == v.
Rational resistance(const Graph& g, VertexId u, VertexId v);

/// Symmetric n x n matrix of pairwise resistances with zero diagonal.
class ResistanceMatrix {
 public:
  ResistanceMatrix(std::size_t order, std::vector<Rational> entries);

  std::size_t order() const noexcept { return order_; }
  const Rational& operator()(VertexId u, VertexId v) const { return entries_[u * order_ + v]; }

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

ResistanceMatrix resistance_matrix(const Graph& g);

struct SpectrumEntry {
  Rational value;
  std::uint64_t multiplicity;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Run-length encoded multiset of pairwise resistances, strictly ascending by value.
class ResistanceSpectrum {
 public:
  ResistanceSpectrum() = default;

  /// Sorts and coalesces; drops zero multiplicities.
  static ResistanceSpectrum from_entries(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  std::uint64_t total_multiplicity() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const ResistanceSpectrum&, const ResistanceSpectrum&) = default;
  friend bool operator<(const ResistanceSpectrum& a, const ResistanceSpectrum& b);

 private:
  std::vector<SpectrumEntry> entries_;
};

struct SpectrumHash {
  std::size_t operator()(const ResistanceSpectrum& s) const noexcept;
};

/// Compact JSON: [["num/den",multiplicity],...].
std::string to_json(const ResistanceSpectrum& s);

/// Parses to_json output; rejects unsorted, duplicate or zero-multiplicity entries.
ResistanceSpectrum spectrum_from_json(std::string_view text);

ResistanceSpectrum resistance_spectrum(const Graph& g);

Rational resistance_diameter(const Graph& g);

/// RS(K_{m,n}): same-part pairs of the n-side at 2/m, cross pairs at 1/m + 1/n - 1/(mn),
/// same-part pairs of the m-side at 2/n, with equal values merged.
ResistanceSpectrum kmn_spectrum_closed_form(std::size_t m, std::size_t n);

}  // namespace resist
