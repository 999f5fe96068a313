// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and case counts are fixed here, not tuned per run.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "lpn/bias.hpp"
#include "lpn/combiner.hpp"
#include "lpn/experiments.hpp"
#include "lpn/planner.hpp"
#include "lpn/random.hpp"
#include "lpn/solver.hpp"
#include "lpn/walsh.hpp"
#include "support/plans.hpp"
#include "support/reference.hpp"

namespace {

using namespace lpn;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome table_reproduction() {
  struct Row {
    double log_n, w, b;
    unsigned w_int;
    std::size_t b_int;
    double r_log_n, lc, ht;
  };
  const std::vector<Row> reference_rows = {
      {10, 11.82, 68.91, 12, 70, 1.8, 60, 63.64}, {20, 5, 78, 6, 94, 20, 60, 38.70},
      {30, 3.17, 80.44, 4, 102, 24.8, 60, 30.17}, {40, 2.32, 81.57, 2, 70, 12.8, 40, 61.32},
      {47, 1.95, 82.06, 2, 84, 2.1, 47, 47.32},   {50, 1.83, 82.22, 2, 90, 8.5, 50, 41.32},
  };
  std::vector<double> log_ns;
  for (const auto& r : reference_rows) log_ns.push_back(r.log_n);
  const auto rows = emit_table(128, Rational(1, 8), log_ns);

  std::size_t matched = 0;
  std::string misses;
  const auto check = [&](bool ok, double log_n, const char* column, double got, double want) {
    if (ok) {
      ++matched;
    } else {
      misses += fmt::format(" [log N={} {}: {} vs {}]", log_n, column, got, want);
    }
  };
  for (std::size_t i = 0; i < reference_rows.size(); ++i) {
    const auto& want = reference_rows[i];
    const auto& got = rows[i];
    if (got.error) {
      misses += fmt::format(" [log N={} infeasible: {}]", want.log_n, *got.error);
      continue;
    }
    check(std::abs(got.w - want.w) <= 0.01, want.log_n, "w", got.w, want.w);
    check(std::abs(got.b - want.b) <= 0.01, want.log_n, "b", got.b, want.b);
    check(got.w_int == want.w_int, want.log_n, "w'", got.w_int, want.w_int);
    check(got.b_int == want.b_int, want.log_n, "b'", double(got.b_int), double(want.b_int));
    check(std::abs(got.r_log_n - want.r_log_n) <= 0.1, want.log_n, "|r| log N", got.r_log_n, want.r_log_n);
    check(got.log_c_lc == std::round(got.log_c_lc) && got.log_c_lc == want.lc, want.log_n, "log C_LC", got.log_c_lc,
          want.lc);
    check(std::abs(got.log_c_ht - want.ht) <= 0.01, want.log_n, "log C_HT", got.log_c_ht, want.ht);
  }
  return {matched == 42, fmt::format("{}/42 cells within tolerance{}", matched, misses)};
}

Outcome formula_consistency() {
  SplitMix64 rng(2024);
  std::size_t ok = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    // Feasible region: from the minimum sample count up to the point where w = 1.
    const std::size_t n = 8 + rng.below(1017);
    const auto den = 2 + rng.below(200);
    const Rational eps(1 + rng.below(den / 2), den);
    const double lo = minimum_samples(eps) + 1e-3;
    const double hi = (static_cast<double>(n) - 2.0 * log2_of(eps)) / 1.5 - 1e-3;
    if (hi <= lo) {
      --i;
      continue;
    }
    const double log_n = lo + (rng.next() >> 11) * 0x1.0p-53 * (hi - lo);
    const auto plan = make_plan(n, eps, log_n);
    const double le = log2_of(eps);
    const double nd = static_cast<double>(n);
    const double e8 = std::abs(plan.b_real - (plan.w_real * (log_n + 2 + 2 * le) - 2));
    const double e14 = std::abs(plan.w_real - 2 * (nd + 2) * plan.t / log_n);
    const double e15 = std::abs(plan.b_real - (nd - (nd + 2) * plan.t));
    worst = std::max({worst, e8, e14, e15});
    if (e8 <= 1e-9 && e14 <= 1e-9 && e15 <= 1e-9 && plan.t < 0.5 && std::abs(plan.r) <= 1.0) ++ok;
  }
  return {ok == 1000, fmt::format("{}/1000 points consistent, worst residual {:.3g}", ok, worst)};
}

Outcome walsh_equivalence() {
  SplitMix64 rng(4242);
  std::size_t equal = 0, involution = 0, parseval = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.below(12);
    const std::size_t count = rng.below(1001);
    std::vector<Sample> eqs;
    for (std::size_t i = 0; i < count; ++i) eqs.push_back({random_bitvec(m, rng), rng.below(2) == 1});
    const auto fast = build_spectrum(eqs, m);
    if (fast == brute_force_spectrum(eqs, m) && fast.values == reference::naive_scores(eqs, m)) ++equal;

    // The accumulated +-1 vector, rebuilt independently.
    std::vector<std::int64_t> counts(std::size_t{1} << m, 0);
    for (const auto& e : eqs) counts[e.coeffs.low_bits(m)] += e.rhs ? -1 : 1;
    std::int64_t energy_in = 0, energy_out = 0;
    for (auto c : counts) energy_in += c * c;
    for (auto v : fast.values) energy_out += v * v;
    if (energy_out == static_cast<std::int64_t>(counts.size()) * energy_in) ++parseval;
    auto twice = fast.values;
    fwht_in_place(twice);
    bool back = true;
    for (std::size_t i = 0; i < counts.size(); ++i) back = back && twice[i] == static_cast<std::int64_t>(counts.size()) * counts[i];
    if (back) ++involution;
  }
  return {equal == 200 && involution == 200 && parseval == 200,
          fmt::format("spectrum {}/200, involution {}/200, Parseval {}/200", equal, involution, parseval)};
}

Outcome combiner_equivalence() {
  SplitMix64 rng(777);
  const unsigned weights[] = {2, 4};
  const std::size_t bs[] = {0, 2, 4, 6};
  std::size_t ok = 0;
  std::size_t total_equations = 0;
  for (int c = 0; c < 50; ++c) {
    const unsigned w = weights[c % 2];
    const std::size_t b = bs[(c / 2) % 4];
    const std::size_t count = w == 2 ? 16 + rng.below(49) : 12 + rng.below(21);
    const std::size_t n = b + 2 + rng.below(8);
    const auto inst = generate_instance(n, Rational(1, 4), count, rng.next());
    const auto result = combine(inst.samples, inst.eps, w, b);

    bool structural = true;
    std::set<reference::EquationKey> got;
    for (const auto& eq : result.equations) {
      BitVec acc(n);
      bool rhs = false;
      for (auto i : eq.indices.view()) {
        acc = reference::xor_bits(acc, inst.samples[i].coeffs);
        rhs = rhs != inst.samples[i].rhs;
      }
      for (std::size_t j = n - b; j < n; ++j) structural = structural && !eq.coeffs.get(j);
      structural = structural && acc == eq.coeffs && rhs == eq.rhs && eq.indices.size() == w;
      const auto idx = eq.indices.view();
      got.emplace(eq.coeffs.to_string(), eq.rhs, std::vector<std::uint32_t>(idx.begin(), idx.end()));
    }
    const bool same = got.size() == result.equations.size() &&
                      got == reference::brute_force_combinations(inst.samples, w, b);
    if (structural && same) ++ok;
    total_equations += result.equations.size();
  }
  return {ok == 50, fmt::format("{}/50 cases equal to subset enumeration ({} equations)", ok, total_equations)};
}

Outcome piling_up() {
  const unsigned ws[] = {2, 3, 4};
  std::string detail;
  bool pass = true;
  for (unsigned w : ws) {
    const auto r = pileup_experiment(Rational(1, 4), w, 1000000, 100 + w);
    const bool ok = std::abs(r.empirical - to_double(r.predicted)) <= 4 * r.sigma;
    pass = pass && ok;
    detail += fmt::format("{}w={}: {:.5f} vs {} (z={:.2f})", detail.empty() ? "" : "; ", w, r.empirical,
                          format_fraction(r.predicted), r.z_score);
  }
  return {pass, detail};
}

Outcome end_to_end() {
  std::size_t recovered = 0;
  double slowest = 0.0;
  const Rational eps(1, 10);
  const std::size_t count = std::size_t{1} << 15;
  const auto plan = testing::pinned_plan(20, eps, count, 2, 16);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = generate_instance(20, eps, count, 1000 + seed);
    const auto t = Clock::now();
    const auto result = solve(inst, plan);
    const double s = seconds_since(t);
    slowest = std::max(slowest, s);
    if (result.key_hat == *inst.key && s < 60.0) ++recovered;
  }
  std::size_t clean = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 24 - seed % 8;
    const auto inst = generate_instance(n, Rational(1, 2), 4 * n, 5000 + seed);
    if (solve(inst, testing::noiseless_plan(n, 4 * n)).key_hat == *inst.key) ++clean;
  }
  return {recovered >= 18 && clean == 50,
          fmt::format("noisy {}/20 (slowest {:.2f} s), noiseless {}/50", recovered, slowest, clean)};
}

Outcome decimation() {
  constexpr std::size_t kCount = 100000;
  const auto uniform = generate_instance(32, Rational(1, 8), kCount, 99);
  const double kept = static_cast<double>(decimate(uniform.samples, 4).retained.size());
  const double sigma = std::sqrt(kCount * (1.0 / 16) * (15.0 / 16));
  const bool retention = std::abs(kept - kCount / 16.0) <= 4 * sigma;

  const Rational eps(1, 8);
  const std::size_t count = std::size_t{1} << 13;
  const auto plan = testing::pinned_plan(24, eps, count, 2, 6, 2);
  std::size_t decimated_ok = 0, reduced_ok = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = generate_instance(24, eps, count, 2000 + seed);
    if (solve(inst, plan).key_hat == *inst.key) ++decimated_ok;

    // The same retained samples as an undecimated 22-dimensional instance.
    LpnInstance reduced;
    reduced.n = 22;
    reduced.eps = eps;
    reduced.samples = decimate(inst.samples, 2).retained;
    const auto reduced_plan = testing::pinned_plan(22, eps, reduced.samples.size(), 2, 6);
    if (solve(reduced, reduced_plan).key_hat == inst.key->slice(2, 22)) ++reduced_ok;
  }
  return {retention && decimated_ok >= 18 && reduced_ok >= 18,
          fmt::format("retained {} (expected {}, 4 sigma {:.0f}); decimated {}/20, reduced {}/20", kept,
                      kCount / 16.0, 4 * sigma, decimated_ok, reduced_ok)};
}

Outcome scaling() {
  std::vector<double> sizes, combine_ms;
  for (std::size_t log_count : {11, 12, 13}) {
    const std::size_t count = std::size_t{1} << log_count;
    sizes.push_back(static_cast<double>(count));
    combine_ms.push_back(time_pairwise_combine(32, count, 4, 3, 17));
  }
  const double slope = log_log_slope(sizes, combine_ms);

  std::vector<double> normalized;
  std::string per_m;
  for (std::size_t m : {16, 20, 24}) {
    const double ms = time_fwht(m, 3, 23);
    normalized.push_back(ms / (static_cast<double>(m) * std::ldexp(1.0, static_cast<int>(m))));
    per_m += fmt::format(" m={}:{:.1f}ms", m, ms);
  }
  const double spread = *std::max_element(normalized.begin(), normalized.end()) /
                        *std::min_element(normalized.begin(), normalized.end());
  return {std::abs(slope - 2.0) <= 0.3 && spread <= 2.0,
          fmt::format("combiner slope {:.2f}; Walsh t/(m 2^m) spread {:.2f}x ({})", slope, spread, per_m.substr(1))};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"parameter-formula consistency", formula_consistency},
      {"Walsh oracle equivalence", walsh_equivalence},
      {"combiner oracle equivalence", combiner_equivalence},
      {"piling-up empirical check", piling_up},
      {"end-to-end recovery", end_to_end},
      {"decimation", decimation},
      {"scaling sanity", scaling},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", name, out.detail.c_str(), seconds_since(t));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
