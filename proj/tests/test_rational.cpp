#include "hmorita/errors.hpp"
#include "hmorita/random.hpp"
#include "hmorita/rational.hpp"

#include <gtest/gtest.h>

using namespace hmorita;

TEST(ExactRational, Addition) {
  EXPECT_EQ(ExactRational(1, 2) + ExactRational(1, 3), ExactRational(5, 6));
  EXPECT_EQ(ExactRational(0) + ExactRational(7, 4), ExactRational(7, 4));
  EXPECT_TRUE((ExactRational(1, 2) + ExactRational(-1, 2)).is_zero());
}

TEST(ExactRational, FieldOperations) {
  EXPECT_EQ(ExactRational(2, 3) * ExactRational(3, 4), ExactRational(1, 2));
  EXPECT_EQ(ExactRational(-5, 7).inverse(), ExactRational(-7, 5));
  EXPECT_EQ(-ExactRational(0), ExactRational(0));
  EXPECT_THROW(ExactRational(0).inverse(), DivisionByZero);
}

TEST(ExactRational, NormalizedOnConstruction) {
  const ExactRational r(6, -4);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "2");
  EXPECT_EQ(r, ExactRational(-3, 2));
  EXPECT_THROW(ExactRational(1, 0), DivisionByZero);
}

TEST(ExactRational, TextualEncoding) {
  EXPECT_EQ(ExactRational::parse("-3/7"), ExactRational(-3, 7));
  EXPECT_EQ(ExactRational::parse("4/6").to_string(), "2/3");
  EXPECT_EQ(ExactRational::parse("12"), ExactRational(12));
  EXPECT_EQ(ExactRational(-3, 7).to_string(), "-3/7");
  EXPECT_EQ(ExactRational(5).to_string(), "5");
  EXPECT_THROW(ExactRational::parse("1/0"), ParseError);
  EXPECT_THROW(ExactRational::parse("1/-2"), ParseError);
  EXPECT_THROW(ExactRational::parse("abc"), ParseError);
  EXPECT_THROW(ExactRational::parse(""), ParseError);
  EXPECT_THROW(ExactRational::parse(" 1"), ParseError);
}

TEST(ExactRational, BeyondMachineIntegers) {
  const auto big = ExactRational::parse("123456789012345678901234567890/7");
  EXPECT_EQ((big * big.inverse()), ExactRational(1));
  EXPECT_EQ((big - big), ExactRational(0));
}

TEST(ExactRational, FieldAxiomsOnRandomTriples) {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const ExactRational a = rng.rational() * ExactRational(1 + static_cast<std::int64_t>(rng.below(100)), 7);
    const ExactRational b = rng.rational();
    const ExactRational c = rng.rational();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), ExactRational(1));
  }
}
