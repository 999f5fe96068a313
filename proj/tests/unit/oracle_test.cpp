#include "lpn/oracle.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "lpn/errors.hpp"
#include "lpn/experiments.hpp"

namespace lpn {
namespace {

TEST(SplitMix64Test, MatchesReferenceSequence) {
  // Reference SplitMix64 outputs for seed 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64Test, BelowStaysInRange) {
  SplitMix64 rng(3);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 10ULL, 1000003ULL, (1ULL << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.below(bound), bound);
  }
}

TEST(OracleTest, NoiselessSamplesSatisfyKey) {
  const auto inst = generate_instance(37, Rational(1, 2), 2000, 4);
  for (const auto& s : inst.samples) ASSERT_EQ(s.rhs, inner_product(s.coeffs, *inst.key));
}

TEST(OracleTest, EmpiricalNoiseRate) {
  constexpr std::size_t kDraws = 1000000;
  const auto key = BitVec::from_string("1011001110");
  SplitMix64 rng(2024);
  std::size_t errors = 0;
  for (std::size_t i = 0; i < kDraws; ++i) {
    const auto s = oracle_sample(key, Rational(1, 8), rng);
    if (s.rhs != inner_product(s.coeffs, key)) ++errors;
  }
  const double p = 0.375;
  const double rate = static_cast<double>(errors) / kDraws;
  EXPECT_LE(std::abs(rate - p), 4.0 * std::sqrt(p * (1 - p) / kDraws));
}

TEST(OracleTest, CoefficientsAreUniform) {
  constexpr std::size_t kDraws = 100000;
  const auto key = BitVec::from_string("1");
  SplitMix64 rng(77);
  std::size_t ones = 0;
  for (std::size_t i = 0; i < kDraws; ++i) ones += oracle_sample(key, Rational(1, 4), rng).coeffs.get(0) ? 1 : 0;
  EXPECT_LE(std::abs(static_cast<double>(ones) / kDraws - 0.5), 4.0 * 0.5 / std::sqrt(kDraws));
}

TEST(OracleTest, RejectsEpsOutOfRange) {
  SplitMix64 rng(1);
  EXPECT_THROW(oracle_sample(BitVec(4), Rational(3, 4), rng), InvalidInput);
  EXPECT_THROW(oracle_sample(BitVec(4), Rational(0, 1), rng), InvalidInput);
  EXPECT_THROW(generate_instance(8, Rational(1, 1), 10, 1), InvalidInput);
}

TEST(OracleTest, SameSeedSameInstance) {
  const auto a = generate_instance(70, Rational(1, 10), 500, 123);
  const auto b = generate_instance(70, Rational(1, 10), 500, 123);
  const auto c = generate_instance(70, Rational(1, 10), 500, 124);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.samples, c.samples);
}

TEST(OracleTest, EmpiricalPilingUp) {
  for (unsigned w : {2U, 3U, 4U}) {
    const auto r = pileup_experiment(Rational(1, 4), w, 1000000, 100 + w);
    EXPECT_LE(std::abs(r.empirical - to_double(r.predicted)), 4.0 / (2.0 * 1000.0)) << "w=" << w;
  }
}

TEST(OracleTest, PileupEdgeCases) {
  const auto identity = pileup_experiment(Rational(1, 8), 1, 200000, 9);
  EXPECT_LE(std::abs(identity.empirical - 0.125), 4 * identity.sigma);
  const auto noiseless = pileup_experiment(Rational(1, 2), 5, 5000, 9);
  EXPECT_EQ(noiseless.empirical, 0.5);
  EXPECT_THROW(pileup_experiment(Rational(1, 4), 2, 999), InvalidInput);
}

TEST(OracleTest, ValidateCatchesBrokenInstances) {
  auto inst = generate_instance(8, Rational(1, 4), 4, 1);
  EXPECT_NO_THROW(validate(inst));
  inst.samples[2].coeffs = BitVec(9);
  EXPECT_THROW(validate(inst), InvalidInput);
}

}  // namespace
}  // namespace lpn
