#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpn/bias.hpp"

namespace lpn {

struct PileupReport {
  Rational predicted;
  double empirical = 0.0;
  std::size_t trials = 0;
  /// Standard error 1 / (2 sqrt(trials)).
  double sigma = 0.0;
  double z_score = 0.0;
};

/// XORs w independent oracle noise bits per trial and measures the bias of
/// the result against piling_up_bias(eps, w). Needs at least 1000 trials.
PileupReport pileup_experiment(const Rational& eps, unsigned w, std::size_t trials, std::uint64_t seed = 1);

/// Least-squares slope of log2(y) against log2(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Best-of-`reps` wall time of combine() with w' = 2 on a fresh planted
/// instance, in milliseconds.
double time_pairwise_combine(std::size_t n, std::size_t sample_count, std::size_t b_int, std::size_t reps,
                             std::uint64_t seed = 1);

/// Best-of-`reps` wall time of fwht_in_place on 2^m random counters, in
/// milliseconds.
double time_fwht(std::size_t m, std::size_t reps, std::uint64_t seed = 1);

}  // namespace lpn
