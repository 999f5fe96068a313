#include "lpn/experiments.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpn/combiner.hpp"
#include "lpn/errors.hpp"
#include "lpn/oracle.hpp"
#include "lpn/random.hpp"
#include "lpn/walsh.hpp"

namespace lpn {

PileupReport pileup_experiment(const Rational& eps, unsigned w, std::size_t trials, std::uint64_t seed) {
  if (trials < 1000) throw InvalidInput("at least 1000 trials are required");
  PileupReport report;
  report.predicted = piling_up_bias(eps, w);
  report.trials = trials;

  const NoiseSource noise(eps);
  SplitMix64 rng(seed);
  std::size_t zeros = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    bool bit = false;
    for (unsigned k = 0; k < w; ++k) bit = bit != noise(rng);
    if (!bit) ++zeros;
  }
  report.empirical = static_cast<double>(zeros) / static_cast<double>(trials) - 0.5;
  report.sigma = 1.0 / (2.0 * std::sqrt(static_cast<double>(trials)));
  report.z_score = (report.empirical - to_double(report.predicted)) / report.sigma;
  return report;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidInput("slope needs at least two paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log2(x[i]);
    const double ly = std::log2(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double time_pairwise_combine(std::size_t n, std::size_t sample_count, std::size_t b_int, std::size_t reps,
                             std::uint64_t seed) {
  if (reps == 0) throw InvalidInput("repetitions must be positive");
  const auto inst = generate_instance(n, Rational(1, 8), sample_count, seed);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = combine(inst.samples, inst.eps, 2, b_int);
    if (result.halves != sample_count) throw std::logic_error("combine enumerated the wrong number of halves");
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    best = std::min(best, ms);
  }
  return best;
}

double time_fwht(std::size_t m, std::size_t reps, std::uint64_t seed) {
  if (reps == 0) throw InvalidInput("repetitions must be positive");
  std::vector<std::int64_t> values(std::size_t{1} << m);
  SplitMix64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < reps; ++r) {
    for (auto& v : values) v = static_cast<std::int64_t>(rng.next() % 2001) - 1000;
    const auto start = std::chrono::steady_clock::now();
    fwht_in_place(values);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    best = std::min(best, ms);
  }
  return best;
}

}  // namespace lpn
