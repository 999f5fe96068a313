#pragma once

#include <cstdint>

namespace lpn {

/// SplitMix64 as a counter-based stream.
///
/// Draw number i (0-based) from a stream with seed s is
///   mix(s + (i + 1) * 0x9E3779B97F4A7C15)
/// where mix is the SplitMix64 finalizer
///   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27; z *= 0x94D049BB133111EB;
///   z ^= z >> 31.
/// This is exactly the reference SplitMix64 sequence, so any implementation
/// of that generator reproduces our instances bit for bit.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t next() noexcept { return mix(seed_ + (++counter_) * kGamma); }

  /// Uniform integer in [0, bound) by rejection of the top partial block;
  /// bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // 2^64 mod bound, computed without overflow.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t u = next();
      if (u >= threshold) return u % bound;
    }
  }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace lpn
