#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpn/bias.hpp"
#include "lpn/bitvec.hpp"
#include "lpn/random.hpp"

namespace lpn {

/// One noisy equation: rhs = <coeffs, key> xor e.
struct Sample {
  BitVec coeffs;
  bool rhs = false;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct LpnInstance {
  std::size_t n = 0;
  Rational eps{1, 2};
  /// The planted secret; absent for attack-only instances.
  std::optional<BitVec> key;
  std::vector<Sample> samples;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const LpnInstance&, const LpnInstance&) = default;
};

/// Throws InvalidInput if the instance breaks its structural invariants.
void validate(const LpnInstance& instance);

/// Bernoulli noise with Pr(1) = 1/2 - eps, sampled exactly.
///
/// One draw of rng.below(2 * den) is compared against den - 2 * num, where
/// eps = num/den in lowest terms. A draw is consumed even when eps = 1/2.
class NoiseSource {
 public:
  explicit NoiseSource(const Rational& eps);
  bool operator()(SplitMix64& rng) const noexcept { return rng.below(range_) < ones_; }

 private:
  std::uint64_t range_ = 2;
  std::uint64_t ones_ = 0;
};

/// Draws a uniform vector of dimension n: one rng word per 64 coordinates,
/// masked to n bits in the last word.
BitVec random_bitvec(std::size_t n, SplitMix64& rng);

/// One oracle call: uniform coeffs, then one noise draw.
Sample oracle_sample(const BitVec& key, const Rational& eps, SplitMix64& rng);

/// Planted instance: the key is drawn first from SplitMix64(seed), then the
/// N samples in order.
LpnInstance generate_instance(std::size_t n, const Rational& eps, std::size_t sample_count,
                              std::uint64_t seed);

}  // namespace lpn
