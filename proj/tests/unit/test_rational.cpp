#include <gtest/gtest.h>

#include "resist/error.hpp"
#include "resist/rational.hpp"

using namespace resist;

TEST(Rational, LowestTermsAndPositiveDenominator) {
  const Rational r(4, -6);
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
  EXPECT_EQ(Rational(6, 3), Rational(2));
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(1 / (Rational(1, 2) + Rational(1, 3) + Rational(1, 6)), Rational(1));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), InvalidArgument);
}

TEST(Rational, BeyondSixtyFourBits) {
  const BigInt big = BigInt(1) << 100;
  const Rational r(big * 3, big * 6);
  EXPECT_EQ(r, Rational(1, 2));
  Rational sum = 0;
  for (int k = 1; k <= 40; ++k) sum += Rational(1, k);
  EXPECT_EQ(to_string(sum), "2078178381193813/485721041551200");
  EXPECT_GT(Rational(big + 1, big), Rational(1));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(5, 9), Rational(2, 3));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(3, 4) <=> Rational(6, 8), std::strong_ordering::equal);
}

TEST(Rational, TextForms) {
  EXPECT_EQ(to_string(Rational(2, 3)), "2/3");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666666666667");
  EXPECT_EQ(to_decimal(Rational(1)), "1");
}
