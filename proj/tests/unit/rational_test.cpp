#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "powersums/errors.hpp"
#include "powersums/rational.hpp"

namespace powersums {
namespace {

using fixtures::R;

TEST(Rational, StoresReducedFormWithPositiveDenominator) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r, R("-3/2"));
  EXPECT_EQ(R("10/5").to_string(), "2");
  EXPECT_EQ(R("-0/7").to_string(), "0");
}

TEST(Rational, ParseRejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1/-2", "abc", "1.5", "1/", "/3", "--1"}) {
    EXPECT_THROW(R(bad), Error) << bad;
  }
  EXPECT_EQ(R(" +12 / 8 "), R("3/2"));
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(R("1/3") + R("1/6"), R("1/2"));
  EXPECT_EQ(R("2/3") * R("9/4"), R("3/2"));
  EXPECT_EQ(R("1/2") / R("-1/4"), R("-2"));
  EXPECT_THROW(R("1") / R("0"), Error);
  EXPECT_EQ(pow(R("-2/3"), 5), R("-32/243"));
  EXPECT_LT(R("-1/2"), R("1/3"));
}

TEST(Rational, SumAgreesWithCommonDenominatorRoute) {
  const Rational a = R("123456789123456789/98765432198");
  const Rational c = R("-5555555555/77777777777777");
  const Integer num = a.numerator() * c.denominator() + c.numerator() * a.denominator();
  const Integer den = a.denominator() * c.denominator();
  EXPECT_EQ(a + c, Rational(num, den));
}

TEST(IsSquare, Examples) {
  EXPECT_TRUE(is_square(R("25/9")));
  EXPECT_TRUE(is_square(R("0")));
  EXPECT_FALSE(is_square(R("5/3")));
  EXPECT_FALSE(is_square(R("-4")));
  EXPECT_FALSE(is_square(R("4/3")));
}

TEST(SqrtExact, Examples) {
  EXPECT_EQ(sqrt_exact(R("25/9")), R("5/3"));
  EXPECT_EQ(sqrt_exact(R("1")), R("1"));
  EXPECT_EQ(sqrt_exact(R("9")), R("3"));
  try {
    sqrt_exact(R("5/3"));
    FAIL() << "expected NotASquare";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASquare);
  }
}

TEST(SqrtExact, LargeSquares) {
  const Integer big("123456789012345678901234567890123456789", 10);
  const Rational r(Integer(big * big), Integer(Integer(97) * 97));
  EXPECT_TRUE(is_square(r));
  EXPECT_EQ(sqrt_exact(r), Rational(big, Integer(97)));
  EXPECT_FALSE(is_square(r + Rational(1)));
}

TEST(Isqrt, FloorsAndRejectsNegatives) {
  EXPECT_EQ(isqrt(Integer(0)), 0);
  EXPECT_EQ(isqrt(Integer(15)), 3);
  EXPECT_EQ(isqrt(Integer(16)), 4);
  EXPECT_THROW(isqrt(Integer(-1)), Error);
}

TEST(Height, IsMaxOfAbsNumeratorAndDenominator) {
  EXPECT_EQ(height(R("-7/3")), 7);
  EXPECT_EQ(height(R("2/9")), 9);
  EXPECT_EQ(height(R("0")), 1);
}

}  // namespace
}  // namespace powersums
