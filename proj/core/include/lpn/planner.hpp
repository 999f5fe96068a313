#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpn/bias.hpp"

namespace lpn {

/// Slack used for every floor and threshold comparison in the planner.
inline constexpr double kPlanSlack = 1e-9;

/// Attack parameters for an n-dimensional instance with 2^log_n_samples
/// samples. When l_prime > 0 the real-valued optimum and the integer
/// parameters describe the decimated problem (dimension n - l_prime,
/// 2^(log_n_samples - l_prime) expected samples).
struct Plan {
  std::size_t n = 0;
  Rational eps{1, 2};
  double log_n_samples = 0.0;
  double w_real = 0.0;
  double b_real = 0.0;
  double t = 0.0;
  unsigned w_int = 2;
  std::size_t b_int = 0;
  double r = 0.0;
  std::size_t l_prime = 0;
  double log_c_lc = 0.0;
  double log_c_ht = 0.0;
  bool feasible = true;
  /// Why the plan is not feasible; empty when feasible.
  std::string reason;

  std::size_t reduced_n() const noexcept { return n - l_prime; }
  /// Dimension of the hypothesis space tested by the Walsh stage.
  std::size_t spectrum_dim() const noexcept { return reduced_n() - b_int; }
};

struct PlanOverrides {
  std::optional<unsigned> w_int;
  std::optional<std::size_t> b_int;
  std::optional<std::size_t> l_prime;
  /// Use decimation_plan() for l_prime when it is not pinned.
  bool auto_decimate = false;
};

/// log N / (3 log N + 4 + 4 log eps).
double compute_T(double log_n_samples, const Rational& eps);

/// Real-valued optimum (n + 2) / (3/2 log N + 2 + 2 log eps).
double choose_w(std::size_t n, double log_n_samples, const Rational& eps);

/// w (log N + 2 + 2 log eps) - 2.
double choose_b(std::size_t n, double w, double log_n_samples, const Rational& eps);

struct RoundedParams {
  unsigned w_int = 2;
  std::size_t b_int = 0;
  double r = 0.0;
};

/// w' = 2 floor((w + 1) / 2), b' = floor(w' (log N + 2 + 2 log eps) - 2),
/// r = w - w'.
RoundedParams round_params(double w, double log_n_samples, const Rational& eps);

struct ComplexityEstimate {
  double log_c_lc = 0.0;
  double log_c_ht = 0.0;
};

/// log C_LC = (w'/2) log N and log C_HT = (n - b') + log(w' log N - b').
ComplexityEstimate complexity_estimates(std::size_t n, unsigned w_int, std::size_t b_int,
                                        double log_n_samples);

/// log2 of 4 / (2 eps)^4, the smallest N the parameter formulas accept.
double minimum_samples(const Rational& eps);

/// log2 of 2^(n / log n) * 4 / (2 eps)^4.
double cube_root_sample_bound(std::size_t n, const Rational& eps);

/// Number of leading key bits that can be decimated away given surplus
/// samples beyond cube_root_sample_bound(); 0 when there is no surplus.
std::size_t decimation_plan(std::size_t n, double log_n_samples, const Rational& eps);

/// log2 of the equations required to test a hypothesis with w' and eps:
/// -(2 (w' - 1) + 2 w' log eps).
double log_required_equations(unsigned w_int, const Rational& eps);

Plan make_plan(std::size_t n, const Rational& eps, double log_n_samples,
               const PlanOverrides& overrides = {});

struct TableRow {
  double log_n_samples = 0.0;
  double w = 0.0;
  double b = 0.0;
  unsigned w_int = 0;
  std::size_t b_int = 0;
  double r_log_n = 0.0;
  double log_c_lc = 0.0;
  double log_c_ht = 0.0;
  /// Set when the row could not be planned; the numeric fields are then unset.
  std::optional<std::string> error;
};

std::vector<TableRow> emit_table(std::size_t n, const Rational& eps,
                                 const std::vector<double>& log_n_list);

}  // namespace lpn
