#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lpn/bias.hpp"
#include "lpn/bitvec.hpp"
#include "lpn/oracle.hpp"

namespace lpn {

/// Largest half weight enumerate_halves() accepts, so w' <= 6.
inline constexpr std::size_t kMaxHalfWeight = 3;

/// Sorted, duplicate-free set of at most 2 * kMaxHalfWeight sample indices.
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 2 * kMaxHalfWeight;

  IndexSet() = default;
  IndexSet(std::initializer_list<std::uint32_t> indices);

  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint32_t> view() const noexcept { return {items_.data(), size_}; }
  std::uint32_t operator[](std::size_t i) const noexcept { return items_[i]; }

  void push_back(std::uint32_t index);
  bool disjoint(const IndexSet& other) const noexcept;
  /// Sorted union; both sets must be disjoint.
  static IndexSet merge(const IndexSet& a, const IndexSet& b);

  friend bool operator==(const IndexSet& a, const IndexSet& b) noexcept {
    return a.size_ == b.size_ && std::equal(a.items_.begin(), a.items_.begin() + a.size_, b.items_.begin());
  }
  friend bool operator<(const IndexSet& a, const IndexSet& b) noexcept;

 private:
  std::array<std::uint32_t, kCapacity> items_{};
  std::uint8_t size_ = 0;
};

/// XOR of w'/2 samples.
struct HalfCombination {
  BitVec coeffs;
  bool rhs = false;
  IndexSet indices;
};

/// XOR of w' samples whose last b' coordinates cancel. Every equation in one
/// CombineResult shares the bias piling_up_bias(eps, w').
struct CombinedEquation {
  BitVec coeffs;
  bool rhs = false;
  IndexSet indices;

  friend bool operator==(const CombinedEquation&, const CombinedEquation&) = default;
};

/// Canonical order: coeffs bytes, then rhs, then indices.
bool canonical_less(const CombinedEquation& a, const CombinedEquation& b) noexcept;

/// C(n, k) as a double (saturates at infinity rather than overflowing).
double binomial(std::size_t n, std::size_t k);

/// Every size-half_weight subset of the samples, in lexicographic index order.
/// Throws ResourceError when C(N, half_weight) exceeds max_halves.
std::vector<HalfCombination> enumerate_halves(std::span<const Sample> samples, std::size_t half_weight,
                                              std::size_t max_halves = std::size_t{1} << 26);

/// Groups halves by their last b' coordinates and emits every in-group pair
/// with disjoint index sets and a nonzero XOR, canonically sorted, one
/// equation per distinct index set.
std::vector<CombinedEquation> bucket_and_pair(std::span<const HalfCombination> halves, std::size_t b_int);

struct CombineResult {
  std::vector<CombinedEquation> equations;
  std::size_t halves = 0;
  Rational bias{1, 2};
  /// C(N, w') / 2^b': expected number of distinct index sets that cancel the
  /// last b' coordinates. For w' = 2 this is C(N, 1)^2 / 2^(b'+1) up to the
  /// diagonal.
  double expected = 0.0;
  /// required_samples(bias) with c = 1.
  double threshold = 0.0;
  /// Set when fewer equations than `threshold` were produced.
  bool shortfall = false;
};

struct CombineOptions {
  std::size_t max_halves = std::size_t{1} << 26;
};

CombineResult combine(std::span<const Sample> samples, const Rational& eps, unsigned w_int, std::size_t b_int,
                      const CombineOptions& options = {});

}  // namespace lpn
