#include "lpn/planner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lpn/errors.hpp"

namespace lpn {
namespace {

double log_eps_checked(const Rational& eps) {
  require_bias(eps);
  return log2_of(eps);
}

std::size_t floor_with_slack(double value) {
  return static_cast<std::size_t>(std::floor(value + kPlanSlack));
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

double compute_T(double log_n_samples, const Rational& eps) {
  const double denom = 3.0 * log_n_samples + 4.0 + 4.0 * log_eps_checked(eps);
  if (denom <= 0.0) throw InfeasiblePlan("too few samples: 3 log N + 4 + 4 log eps <= 0");
  return log_n_samples / denom;
}

double choose_w(std::size_t n, double log_n_samples, const Rational& eps) {
  const double denom = 1.5 * log_n_samples + 2.0 + 2.0 * log_eps_checked(eps);
  if (denom <= 0.0) throw InfeasiblePlan("too few samples: 3/2 log N + 2 + 2 log eps <= 0");
  return static_cast<double>(n + 2) / denom;
}

double choose_b(std::size_t /*n*/, double w, double log_n_samples, const Rational& eps) {
  if (!(w > 0.0)) throw InvalidInput("w must be positive");
  return w * (log_n_samples + 2.0 + 2.0 * log_eps_checked(eps)) - 2.0;
}

RoundedParams round_params(double w, double log_n_samples, const Rational& eps) {
  if (!(w > 0.0)) throw InvalidInput("w must be positive");
  RoundedParams p;
  // Below w = 1 the rounding rule gives 0; pairs are the smallest useful combination.
  p.w_int = std::max(2U, 2 * static_cast<unsigned>(std::floor((w + 1.0) / 2.0 + kPlanSlack)));
  const double b = static_cast<double>(p.w_int) * (log_n_samples + 2.0 + 2.0 * log_eps_checked(eps)) - 2.0;
  if (b < -kPlanSlack) throw InfeasiblePlan("negative b': " + fmt_double(b));
  p.b_int = floor_with_slack(std::max(b, 0.0));
  p.r = w - static_cast<double>(p.w_int);
  return p;
}

ComplexityEstimate complexity_estimates(std::size_t n, unsigned w_int, std::size_t b_int,
                                        double log_n_samples) {
  if (w_int < 2 || w_int % 2 != 0) throw InvalidInput("w' must be even and >= 2");
  const double surviving = static_cast<double>(w_int) * log_n_samples - static_cast<double>(b_int);
  if (surviving <= 0.0) {
    throw InfeasiblePlan("empty hypothesis space: w' log N - b' <= 0 (no equations survive)");
  }
  ComplexityEstimate c;
  c.log_c_lc = static_cast<double>(w_int) / 2.0 * log_n_samples;
  c.log_c_ht = (static_cast<double>(n) - static_cast<double>(b_int)) + std::log2(surviving);
  return c;
}

double minimum_samples(const Rational& eps) {
  const double log_eps = log_eps_checked(eps);
  return 2.0 - 4.0 * (1.0 + log_eps);
}

double cube_root_sample_bound(std::size_t n, const Rational& eps) {
  if (n < 2) throw InvalidInput("cube_root_sample_bound needs n >= 2");
  const double nd = static_cast<double>(n);
  return nd / std::log2(nd) + minimum_samples(eps);
}

std::size_t decimation_plan(std::size_t n, double log_n_samples, const Rational& eps) {
  if (n < 4) return 0;
  const double bound = cube_root_sample_bound(n, eps);
  if (log_n_samples < bound) return 0;
  const double l = log_n_samples - bound;
  std::size_t l_prime = std::min(floor_with_slack(l), n - 3);
  const double nd = static_cast<double>(n);
  const auto holds = [&](std::size_t lp) {
    const double rest = static_cast<double>(n - lp);
    return nd / std::log2(nd) + l - static_cast<double>(lp) >= rest / std::log2(rest) - kPlanSlack;
  };
  while (l_prime > 0 && !holds(l_prime)) --l_prime;
  return l_prime;
}

double log_required_equations(unsigned w_int, const Rational& eps) {
  return -(2.0 * (static_cast<double>(w_int) - 1.0) + 2.0 * static_cast<double>(w_int) * log_eps_checked(eps));
}

Plan make_plan(std::size_t n, const Rational& eps, double log_n_samples, const PlanOverrides& overrides) {
  if (n == 0) throw InvalidInput("dimension n must be positive");
  require_bias(eps);
  const double min_log_n = minimum_samples(eps);
  if (log_n_samples < min_log_n - kPlanSlack) {
    throw InfeasiblePlan("too few samples: log N = " + fmt_double(log_n_samples) + " < " +
                         fmt_double(min_log_n) + " = log 4/(2 eps)^4");
  }

  Plan plan;
  plan.n = n;
  plan.eps = eps;
  plan.log_n_samples = log_n_samples;

  if (overrides.l_prime) {
    plan.l_prime = *overrides.l_prime;
    if (plan.l_prime > 0 && plan.l_prime + 3 > n) {
      throw InvalidInput("decimation amount l' must not exceed n - 3");
    }
  } else if (overrides.auto_decimate) {
    plan.l_prime = decimation_plan(n, log_n_samples, eps);
  }

  const std::size_t eff_n = plan.reduced_n();
  const double eff_log_n = log_n_samples - static_cast<double>(plan.l_prime);
  if (eff_log_n < min_log_n - kPlanSlack) {
    throw InfeasiblePlan("too few samples after decimating " + std::to_string(plan.l_prime) +
                         " bits: log N - l' = " + fmt_double(eff_log_n));
  }

  plan.t = compute_T(eff_log_n, eps);
  plan.w_real = choose_w(eff_n, eff_log_n, eps);
  plan.b_real = choose_b(eff_n, plan.w_real, eff_log_n, eps);

  if (overrides.w_int) {
    if (*overrides.w_int < 2 || *overrides.w_int % 2 != 0) {
      throw InvalidInput("w' override must be even and >= 2");
    }
    plan.w_int = *overrides.w_int;
  } else {
    plan.w_int = round_params(plan.w_real, eff_log_n, eps).w_int;
  }
  plan.r = plan.w_real - static_cast<double>(plan.w_int);

  const double rounded_b = static_cast<double>(plan.w_int) * (eff_log_n + 2.0 + 2.0 * log2_of(eps)) - 2.0;
  if (overrides.b_int) {
    plan.b_int = *overrides.b_int;
  } else {
    if (rounded_b < -kPlanSlack) throw InfeasiblePlan("negative b': " + fmt_double(rounded_b));
    plan.b_int = floor_with_slack(std::max(rounded_b, 0.0));
  }

  if (plan.b_int + 1 > eff_n) {
    plan.b_int = eff_n - 1;
    plan.feasible = false;
    plan.reason = "b' clamped to n - 1 (at least one key bit must remain for hypothesis testing)";
  }

  // Enough equations: w' log N - b' >= log of 1 / (2^(2(w'-1)) eps^(2w')).
  const double log_equations = static_cast<double>(plan.w_int) * eff_log_n - static_cast<double>(plan.b_int);
  if (plan.feasible && log_equations < log_required_equations(plan.w_int, eps) - kPlanSlack) {
    plan.feasible = false;
    plan.reason = "insufficient equations: log(N^w'/2^b') = " + fmt_double(log_equations) +
                  " < " + fmt_double(log_required_equations(plan.w_int, eps));
  }

  const auto cost = complexity_estimates(eff_n, plan.w_int, plan.b_int, eff_log_n);
  plan.log_c_lc = cost.log_c_lc;
  plan.log_c_ht = cost.log_c_ht;
  return plan;
}

std::vector<TableRow> emit_table(std::size_t n, const Rational& eps, const std::vector<double>& log_n_list) {
  std::vector<TableRow> rows;
  rows.reserve(log_n_list.size());
  for (double log_n : log_n_list) {
    TableRow row;
    row.log_n_samples = log_n;
    try {
      const Plan plan = make_plan(n, eps, log_n);
      row.w = plan.w_real;
      row.b = plan.b_real;
      row.w_int = plan.w_int;
      row.b_int = plan.b_int;
      row.r_log_n = std::abs(plan.r) * log_n;
      row.log_c_lc = plan.log_c_lc;
      row.log_c_ht = plan.log_c_ht;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lpn
