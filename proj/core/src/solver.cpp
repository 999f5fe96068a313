#include "lpn/solver.hpp"

#include <chrono>
#include <cmath>

#include "lpn/combiner.hpp"
#include "lpn/errors.hpp"
#include "lpn/walsh.hpp"

namespace lpn {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

BitVec concat(const BitVec& head, const BitVec& tail) {
  BitVec out(head.size() + tail.size());
  for (std::size_t j = 0; j < head.size(); ++j) out.set(j, head.get(j));
  for (std::size_t j = 0; j < tail.size(); ++j) out.set(head.size() + j, tail.get(j));
  return out;
}

std::size_t dimension_of(std::span<const Sample> samples) {
  if (samples.empty()) throw InvalidInput("no samples");
  return samples.front().coeffs.size();
}

BitVec solve_samples(std::span<const Sample> samples, const Rational& eps, const Plan& plan,
                     const SolverConfig& config, std::size_t depth, StageReport& report, double& agreement);

// Plan for a sub-instance reached by recursion. Falls back to pairwise
// combination with a spectrum of fwt_cap bits when the formulas give nothing
// usable at this size.
Plan recursion_plan(std::size_t n, const Rational& eps, std::size_t sample_count, const SolverConfig& config) {
  const double log_n = std::log2(static_cast<double>(sample_count));
  try {
    Plan plan = make_plan(n, eps, log_n);
    if (plan.feasible && plan.spectrum_dim() <= config.max_spectrum_dim) return plan;
  } catch (const InfeasiblePlan&) {
  }
  PlanOverrides fallback;
  fallback.w_int = 2;
  fallback.b_int = n > config.fwt_cap ? n - config.fwt_cap : 0;
  fallback.l_prime = 0;
  try {
    Plan plan = make_plan(n, eps, log_n, fallback);
    plan.feasible = true;
    return plan;
  } catch (const InfeasiblePlan&) {
    // Too few samples for the formulas at all; run the pairwise pipeline anyway.
    Plan plan;
    plan.n = n;
    plan.eps = eps;
    plan.log_n_samples = log_n;
    plan.w_int = 2;
    plan.b_int = *fallback.b_int;
    return plan;
  }
}

}  // namespace

double acceptance_threshold(const Rational& eps) { return 0.5 + to_double(eps) / 2.0; }

Decimation decimate(std::span<const Sample> samples, std::size_t l_prime) {
  Decimation d;
  const std::size_t n = samples.empty() ? 0 : dimension_of(samples);
  if (!samples.empty() && l_prime > 0 && l_prime + 3 > n) {
    throw InvalidInput("decimation amount l' must not exceed n - 3");
  }
  d.n = n - std::min(n, l_prime);
  d.expected = std::ldexp(static_cast<double>(samples.size()), -static_cast<int>(l_prime));
  if (l_prime == 0) {
    d.retained.assign(samples.begin(), samples.end());
    return d;
  }
  for (const auto& s : samples) {
    if (s.coeffs.is_zero_below(l_prime)) d.retained.push_back(Sample{s.coeffs.slice(l_prime, d.n), s.rhs});
  }
  return d;
}

double verify_key(std::span<const Sample> samples, const BitVec& key) {
  if (samples.empty()) throw InvalidInput("agreement is undefined for an empty sample list");
  std::size_t agree = 0;
  for (const auto& s : samples) {
    if (inner_product(s.coeffs, key) == s.rhs) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(samples.size());
}

SuffixRecovery recover_suffix(std::span<const Sample> samples, const BitVec& known_prefix, const Rational& eps,
                              const SolverConfig& config, std::size_t depth) {
  const std::size_t n = dimension_of(samples);
  const std::size_t m = known_prefix.size();
  if (m >= n) throw InvalidInput("recover_suffix needs at least one unknown coordinate");
  const std::size_t rest = n - m;

  std::vector<Sample> reduced;
  reduced.reserve(samples.size());
  for (const auto& s : samples) {
    const BitVec head = s.coeffs.slice(0, m);
    reduced.push_back(Sample{s.coeffs.slice(m, rest), s.rhs != inner_product(head, known_prefix)});
  }

  SuffixRecovery out;
  out.depth = depth;
  out.shortfall = BigInt(samples.size()) < required_samples(eps);

  if (rest <= config.fwt_cap) {
    const auto spectrum = build_spectrum(std::span<const Sample>(reduced), rest, {config.max_spectrum_dim});
    out.key = concat(known_prefix, BitVec::from_uint(best_candidate(spectrum).x_hat, rest));
    return out;
  }

  if (depth + 1 > config.max_depth) {
    throw ResourceError("suffix", "recursion depth limit " + std::to_string(config.max_depth) + " reached");
  }
  const Plan plan = recursion_plan(rest, eps, reduced.size(), config);
  StageReport inner;
  double agreement = 0.0;
  const BitVec suffix = solve_samples(reduced, eps, plan, config, depth + 1, inner, agreement);
  out.key = concat(known_prefix, suffix);
  out.depth = std::max(depth + 1, inner.recursion_depth);
  return out;
}

namespace {

BitVec solve_samples(std::span<const Sample> samples, const Rational& eps, const Plan& plan,
                     const SolverConfig& config, std::size_t depth, StageReport& report, double& agreement) {
  const auto total_start = Clock::now();
  const std::size_t n = dimension_of(samples);
  report.samples_used = samples.size();
  report.recursion_depth = std::max(report.recursion_depth, depth);

  auto t = Clock::now();
  const Decimation dec = decimate(samples, plan.l_prime);
  report.decimate_ms += elapsed_ms(t);
  report.retained = dec.retained.size();
  report.retained_expected = dec.expected;
  if (dec.retained.empty()) {
    throw ResourceError("decimate", "no samples survive decimating " + std::to_string(plan.l_prime) + " bits");
  }
  if (static_cast<double>(dec.retained.size()) < dec.expected / 2.0) {
    report.warnings.push_back("decimation retained far fewer samples than expected");
  }

  const std::size_t reduced_n = dec.n;
  if (plan.b_int >= reduced_n) throw InvalidInput("b' leaves no coordinates for hypothesis testing");
  const std::size_t m = reduced_n - plan.b_int;

  t = Clock::now();
  const auto combined = combine(dec.retained, eps, plan.w_int, plan.b_int, {config.max_halves});
  report.combine_ms += elapsed_ms(t);
  report.halves = combined.halves;
  report.equations = combined.equations.size();
  report.eq_expected = combined.expected;
  report.eq_threshold = combined.threshold;
  if (combined.shortfall) {
    report.warnings.push_back("combined equations (" + std::to_string(combined.equations.size()) +
                              ") below the hypothesis-testing threshold");
  }

  // Equations carry zeros on [m, reduced_n); the Walsh stage only reads [0, m).
  std::vector<CombinedEquation> prefix_eqs;
  prefix_eqs.reserve(combined.equations.size());
  for (const auto& eq : combined.equations) {
    prefix_eqs.push_back(CombinedEquation{eq.coeffs.slice(0, m), eq.rhs, eq.indices});
  }

  t = Clock::now();
  report.spectrum_dim = m;
  const auto spectrum = build_spectrum(prefix_eqs, m, {config.max_spectrum_dim});
  const auto candidates = ranked_candidates(spectrum, std::max<std::size_t>(config.max_candidates, 1));
  report.walsh_ms += elapsed_ms(t);

  const double threshold = acceptance_threshold(eps);
  BitVec best_key;
  agreement = -1.0;
  for (const auto& cand : candidates) {
    ++report.candidates_tried;
    const BitVec prefix = BitVec::from_uint(cand.x, m);

    t = Clock::now();
    BitVec reduced_key = prefix;
    if (plan.b_int > 0) {
      const auto rec = recover_suffix(dec.retained, prefix, eps, config, depth);
      if (rec.shortfall) report.warnings.push_back("suffix recovery below required_samples(eps)");
      report.recursion_depth = std::max(report.recursion_depth, rec.depth);
      reduced_key = rec.key;
    }
    report.suffix_ms += elapsed_ms(t);

    t = Clock::now();
    BitVec key = reduced_key;
    if (plan.l_prime > 0) {
      // Rotate so the decimated coordinates become the unknown suffix.
      const std::size_t lp = plan.l_prime;
      std::vector<Sample> rotated;
      rotated.reserve(samples.size());
      for (const auto& s : samples) {
        rotated.push_back(Sample{concat(s.coeffs.slice(lp, n - lp), s.coeffs.slice(0, lp)), s.rhs});
      }
      const auto rec = recover_suffix(rotated, reduced_key, eps, config, depth);
      report.recursion_depth = std::max(report.recursion_depth, rec.depth);
      key = concat(rec.key.slice(n - lp, lp), rec.key.slice(0, n - lp));
    }
    report.decimated_bits_ms += elapsed_ms(t);

    t = Clock::now();
    const double a = verify_key(samples, key);
    report.verify_ms += elapsed_ms(t);
    if (a > agreement) {
      agreement = a;
      best_key = key;
    }
    if (a >= threshold) break;
  }
  report.total_ms += elapsed_ms(total_start);
  return best_key;
}

}  // namespace

SolveResult solve(const LpnInstance& instance, const Plan& plan, const SolverConfig& config) {
  validate(instance);
  if (!plan.feasible) throw InfeasiblePlan("plan is not feasible: " + plan.reason);
  if (plan.n != instance.n) throw InvalidInput("plan dimension does not match the instance");
  if (plan.eps != instance.eps) throw InvalidInput("plan bias does not match the instance");
  if (instance.samples.empty() ||
      std::log2(static_cast<double>(instance.samples.size())) < plan.log_n_samples - kPlanSlack) {
    throw InvalidInput("instance has fewer than 2^log_N samples");
  }

  SolveResult result;
  result.key_hat = solve_samples(instance.samples, instance.eps, plan, config, 0, result.report, result.agreement);
  result.success = result.agreement >= acceptance_threshold(instance.eps);
  return result;
}

}  // namespace lpn
