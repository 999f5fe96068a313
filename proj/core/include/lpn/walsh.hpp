#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lpn/combiner.hpp"
#include "lpn/oracle.hpp"

namespace lpn {

/// Signed agreement counts over all 2^m sub-key candidates. Candidate x
/// assigns bit j of x to key coordinate j.
struct WalshSpectrum {
  std::size_t m = 0;
  std::vector<std::int64_t> values;
  std::size_t total = 0;

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// Unnormalized Walsh-Hadamard transform with the +/-1 kernel:
/// out[x] = sum_g in[g] (-1)^popcount(g & x). Length must be a power of two.
void fwht_in_place(std::span<std::int64_t> values);

struct SpectrumOptions {
  std::size_t max_dim = 26;
};

/// values[x] = sum over equations of (-1)^(<g, x> xor rhs), built by
/// accumulating (-1)^rhs at g's prefix and transforming. Every coordinate
/// at or above m must be zero.
WalshSpectrum build_spectrum(std::span<const CombinedEquation> equations, std::size_t m,
                             const SpectrumOptions& options = {});
WalshSpectrum build_spectrum(std::span<const Sample> equations, std::size_t m,
                             const SpectrumOptions& options = {});

/// Same contract as build_spectrum, by direct evaluation of every candidate.
/// Limited to m <= 16.
WalshSpectrum brute_force_spectrum(std::span<const CombinedEquation> equations, std::size_t m);
WalshSpectrum brute_force_spectrum(std::span<const Sample> equations, std::size_t m);

struct Candidate {
  std::uint64_t x = 0;
  std::int64_t score = 0;
};

struct BestCandidate {
  std::uint64_t x_hat = 0;
  std::int64_t score = 0;
  /// Runner-up value; equals score when the spectrum has a single entry.
  std::int64_t second_score = 0;
};

/// Argmax with ties broken toward the smallest index.
BestCandidate best_candidate(const WalshSpectrum& spectrum);

/// The k highest-scoring candidates, score descending then index ascending.
std::vector<Candidate> ranked_candidates(const WalshSpectrum& spectrum, std::size_t k);

}  // namespace lpn
