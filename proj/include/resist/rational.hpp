#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace resist {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator, so
/// equality is structural.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument when den == 0.
  Rational(BigInt num, BigInt den);
  template <std::integral A, std::integral B>
  Rational(A num, B den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  int sign() const noexcept { return num_.sign(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws InvalidArgument on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::size_t hash_value(const Rational& r) noexcept;

/// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Inverse of to_string; also accepts unreduced input such as "4/6". Throws ParseError.
Rational parse_rational(std::string_view text);

/// 12 significant digits; callers must label the result as an approximation.
std::string to_decimal(const Rational& r);

}  // namespace resist
