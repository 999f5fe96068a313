#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lpn/bias.hpp"
#include "lpn/bitvec.hpp"
#include "lpn/oracle.hpp"
#include "lpn/planner.hpp"

namespace lpn {

struct SolverConfig {
  /// Remaining dimensions up to this are solved by a direct Walsh spectrum
  /// over the original samples; above it, recover_suffix recurses.
  std::size_t fwt_cap = 20;
  std::size_t max_halves = std::size_t{1} << 26;
  std::size_t max_spectrum_dim = 26;
  /// Top-scoring sub-key candidates tried, in rank order, until one verifies.
  std::size_t max_candidates = 8;
  std::size_t max_depth = 8;
};

struct StageReport {
  std::size_t samples_used = 0;
  std::size_t retained = 0;
  double retained_expected = 0.0;
  std::size_t halves = 0;
  std::size_t equations = 0;
  double eq_expected = 0.0;
  double eq_threshold = 0.0;
  std::size_t spectrum_dim = 0;
  std::size_t recursion_depth = 0;
  std::size_t candidates_tried = 0;
  double decimate_ms = 0.0;
  double combine_ms = 0.0;
  double walsh_ms = 0.0;
  double suffix_ms = 0.0;
  double decimated_bits_ms = 0.0;
  double verify_ms = 0.0;
  double total_ms = 0.0;
  std::vector<std::string> warnings;
};

struct SolveResult {
  BitVec key_hat;
  double agreement = 0.0;
  bool success = false;
  StageReport report;
};

/// Agreement at which a key counts as recovered: 1/2 + eps/2.
double acceptance_threshold(const Rational& eps);

struct Decimation {
  /// Samples zero on coordinates [0, l'), re-indexed to dimension n - l'.
  std::vector<Sample> retained;
  std::size_t n = 0;
  /// N * 2^-l'.
  double expected = 0.0;
};

Decimation decimate(std::span<const Sample> samples, std::size_t l_prime);

struct SuffixRecovery {
  BitVec key;
  bool shortfall = false;
  std::size_t depth = 0;
};

/// Fixes key coordinates [0, m) to `known_prefix`, then solves the remaining
/// coordinates at the original bias.
SuffixRecovery recover_suffix(std::span<const Sample> samples, const BitVec& known_prefix, const Rational& eps,
                              const SolverConfig& config = {}, std::size_t depth = 0);

/// Fraction of samples with rhs = <coeffs, key>. Throws on an empty list.
double verify_key(std::span<const Sample> samples, const BitVec& key);

/// Full pipeline: decimate, combine, Walsh test, back-substitute the
/// bucketed-out bits, then the decimated bits from the full sample set,
/// then verify.
SolveResult solve(const LpnInstance& instance, const Plan& plan, const SolverConfig& config = {});

}  // namespace lpn
