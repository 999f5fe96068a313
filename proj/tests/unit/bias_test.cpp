#include "lpn/bias.hpp"

#include <gtest/gtest.h>

#include "lpn/errors.hpp"

namespace lpn {
namespace {

TEST(BiasTest, PilingUpExamples) {
  const Rational eighth(1, 8);
  EXPECT_EQ(piling_up_bias(eighth, 1), eighth);
  EXPECT_EQ(piling_up_bias(Rational(3, 10), 1), Rational(3, 10));
  EXPECT_EQ(piling_up_bias(eighth, 2), Rational(1, 32));
  EXPECT_EQ(piling_up_bias(eighth, 12), Rational(BigInt(1), BigInt(1) << 25));
}

TEST(BiasTest, PilingUpRejectsZeroWeightAndBadEps) {
  EXPECT_THROW(piling_up_bias(Rational(1, 8), 0), InvalidInput);
  EXPECT_THROW(piling_up_bias(Rational(0, 1), 2), InvalidInput);
  EXPECT_THROW(piling_up_bias(Rational(3, 4), 2), InvalidInput);
}

TEST(BiasTest, ImbalanceIsMultiplicative) {
  for (const auto& eps : {Rational(1, 8), Rational(1, 2), Rational(3, 7), Rational(1, 10), Rational(5, 17)}) {
    for (unsigned w1 = 1; w1 <= 9; ++w1) {
      for (unsigned w2 = 1; w2 <= 9; ++w2) {
        EXPECT_EQ(2 * piling_up_bias(eps, w1 + w2), (2 * piling_up_bias(eps, w1)) * (2 * piling_up_bias(eps, w2)));
      }
    }
  }
}

TEST(BiasTest, RequiredSamplesExamples) {
  EXPECT_EQ(required_samples(Rational(1, 32)), 1024);
  EXPECT_EQ(required_samples(Rational(1, 2)), 4);
  EXPECT_EQ(required_samples(Rational(1, 32), Rational(4)), 4096);
  EXPECT_EQ(required_samples(Rational(1, 3)), 9);
  EXPECT_EQ(required_samples(Rational(2, 7)), 13);  // 49/4 rounded up
  EXPECT_THROW(required_samples(Rational(0, 1)), InvalidInput);
}

TEST(BiasTest, FractionParsing) {
  EXPECT_EQ(parse_fraction("1/10"), Rational(1, 10));
  EXPECT_EQ(parse_fraction("2/16"), Rational(1, 8));
  EXPECT_EQ(format_fraction(parse_fraction("2/16")), "1/8");
  EXPECT_THROW(parse_fraction("0.125"), InvalidInput);
  EXPECT_THROW(parse_fraction("1/0"), InvalidInput);
  EXPECT_THROW(parse_fraction("-1/8"), InvalidInput);
  EXPECT_THROW(parse_fraction("1/"), InvalidInput);
}

TEST(BiasTest, Log2OfRational) {
  EXPECT_DOUBLE_EQ(log2_of(Rational(1, 8)), -3.0);
  EXPECT_NEAR(log2_of(Rational(1, 10)), -3.321928094887362, 1e-12);
  EXPECT_NEAR(log2_of(piling_up_bias(Rational(1, 8), 200)), 199.0 - 600.0, 1e-9);
}

}  // namespace
}  // namespace lpn
