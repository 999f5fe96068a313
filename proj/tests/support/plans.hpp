#pragma once

#include <algorithm>
#include <cmath>

#include "lpn/combiner.hpp"
#include "lpn/planner.hpp"

namespace lpn::testing {

/// Pairwise plan for small noiseless instances: the asymptotic optimum
/// leaves only a handful of equations there, so b' is chosen to keep about
/// 4n of them, which pins the key down with overwhelming probability.
inline Plan noiseless_plan(std::size_t n, std::size_t sample_count) {
  const double pairs = binomial(sample_count, 2);
  const double b = std::floor(std::log2(pairs / (4.0 * static_cast<double>(n))));
  PlanOverrides o;
  o.w_int = 2;
  o.b_int = static_cast<std::size_t>(std::clamp(b, 0.0, static_cast<double>(n - 1)));
  o.l_prime = 0;
  return make_plan(n, Rational(1, 2), std::log2(static_cast<double>(sample_count)), o);
}

inline Plan pinned_plan(std::size_t n, const Rational& eps, std::size_t sample_count, unsigned w, std::size_t b,
                        std::size_t l_prime = 0) {
  PlanOverrides o;
  o.w_int = w;
  o.b_int = b;
  o.l_prime = l_prime;
  return make_plan(n, eps, std::log2(static_cast<double>(sample_count)), o);
}

}  // namespace lpn::testing
