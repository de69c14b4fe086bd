#include "resist/rational.hpp"

#include <cstdint>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "resist/error.hpp"

namespace resist {

namespace {

bool fits_int64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() + 1 && x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidArgument("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (fits_int64(num_) && fits_int64(den_)) {
    const auto n = static_cast<std::int64_t>(num_);
    const auto d = static_cast<std::int64_t>(den_);
    const std::int64_t g = std::gcd(n, d);
    if (g != 1) {
      num_ = n / g;
      den_ = d / g;
    }
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvalidArgument("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::size_t hash_value(const Rational& r) noexcept {
  std::size_t h = boost::multiprecision::hash_value(r.numerator());
  return h * 1000003u ^ boost::multiprecision::hash_value(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t base_offset, bool allow_sign) {
  if (text.empty()) throw ParseError("empty integer", base_offset);
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
    if (text.size() == 1) throw ParseError("sign without digits", base_offset);
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError("invalid digit in rational", base_offset + i);
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0, true));
  BigInt num = parse_integer(text.substr(0, slash), 0, true);
  BigInt den = parse_integer(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(std::move(num), std::move(den));
}

std::string to_decimal(const Rational& r) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec value = Dec(r.numerator()) / Dec(r.denominator());
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

}  // namespace resist
