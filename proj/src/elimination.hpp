#pragma once

// Fraction-free elimination kernels shared by the resistance engine and its fast paths.
// Every intermediate value is a minor of the input, so each division is exact.

#include <cstdint>
#include <optional>
#include <utility>

#include "resist/rational.hpp"
#include "resist/resistance.hpp"

namespace resist::detail {

struct Overflow {};

inline std::int64_t cross_div(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t prev) {
  std::int64_t x, y, z;
  if (!__builtin_mul_overflow(p, a, &x) && !__builtin_mul_overflow(b, c, &y) && !__builtin_sub_overflow(x, y, &z))
    return z / prev;
  const __int128 t = (static_cast<__int128>(p) * a - static_cast<__int128>(b) * c) / prev;
  if (t > INT64_MAX || t < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(t);
}

inline BigInt cross_div(const BigInt& p, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& prev) {
  return (p * a - b * c) / prev;
}

// a + b - c - d
inline std::int64_t combine(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 t = static_cast<__int128>(a) + b - c - d;
  if (t > INT64_MAX || t < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(t);
}

inline BigInt combine(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) { return a + b - c - d; }

template <class Int>
Matrix<Int> convert(const IntMatrix& m) {
  Matrix<Int> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Int(m(r, c));
  return out;
}

// Bareiss determinant; `a` is consumed.
template <class Int>
Int bareiss_determinant(Matrix<Int> a) {
  const std::size_t n = a.rows();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return Int(0);
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = cross_div(a(k, k), a(i, j), a(i, k), a(k, j), prev);
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? prev : Int(-prev);
}

// Fraction-free Gauss-Jordan on [M | I]. On success the left block is d*I and the
// returned `scaled_inverse` is d*M^{-1}, with |d| = |det M|. Returns nullopt when singular.
template <class Int>
struct ScaledInverse {
  Int scale;
  Matrix<Int> scaled_inverse;
};

template <class Int>
std::optional<ScaledInverse<Int>> scaled_inverse(const Matrix<Int>& m) {
  const std::size_t n = m.rows();
  Matrix<Int> a(n, 2 * n, Int(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n + r) = 1;
  }
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(a(k, c), a(pivot, c));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Int factor = a(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = cross_div(a(k, k), a(i, j), factor, a(k, j), prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  ScaledInverse<Int> out{prev, Matrix<Int>(n, n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.scaled_inverse(r, c) = a(r, n + c);
  return out;
}

// Pairwise resistances of a connected graph as numerators over one shared positive
// denominator (the spanning-tree count). numerators is row-major n x n.
template <class Int>
struct ResistanceNumerators {
  Int denominator;
  Matrix<Int> numerators;
};

template <class Int>
std::optional<ResistanceNumerators<Int>> resistance_numerators(const IntMatrix& lap) {
  const std::size_t n = lap.rows();
  const std::size_t ground = n - 1;
  Matrix<Int> reduced(ground, ground);
  for (std::size_t r = 0; r < ground; ++r)
    for (std::size_t c = 0; c < ground; ++c) reduced(r, c) = Int(lap(r, c));
  auto inv = scaled_inverse(reduced);
  if (!inv) return std::nullopt;

  ResistanceNumerators<Int> out{inv->scale, Matrix<Int>(n, n, Int(0))};
  const auto& x = inv->scaled_inverse;
  auto at = [&](std::size_t r, std::size_t c) -> Int { return (r == ground || c == ground) ? Int(0) : x(r, c); };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      Int num = combine(at(u, u), at(v, v), at(u, v), at(v, u));
      out.numerators(u, v) = num;
      out.numerators(v, u) = num;
    }
  if (out.denominator < 0) {
    out.denominator = -out.denominator;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) out.numerators(u, v) = -out.numerators(u, v);
  }
  return out;
}

}  // namespace resist::detail
