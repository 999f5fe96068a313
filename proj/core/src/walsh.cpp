#include "lpn/walsh.hpp"

#include <algorithm>
#include <bit>

#include "lpn/errors.hpp"

namespace lpn {
namespace {

// Levels with stride below this run block by block so each block stays in
// cache for all of its levels.
constexpr std::size_t kBlock = std::size_t{1} << 12;

void butterflies(std::int64_t* data, std::size_t length, std::size_t h_begin, std::size_t h_end) {
  for (std::size_t h = h_begin; h < h_end; h <<= 1) {
    for (std::size_t i = 0; i < length; i += 2 * h) {
      std::int64_t* lo = data + i;
      std::int64_t* hi = lo + h;
      for (std::size_t j = 0; j < h; ++j) {
        const std::int64_t a = lo[j];
        const std::int64_t b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
}

// Two levels (strides h and 2h) fused into one pass over memory.
void radix4_pass(std::int64_t* data, std::size_t length, std::size_t h) {
  for (std::size_t i = 0; i < length; i += 4 * h) {
    std::int64_t* p0 = data + i;
    std::int64_t* p1 = p0 + h;
    std::int64_t* p2 = p1 + h;
    std::int64_t* p3 = p2 + h;
    for (std::size_t j = 0; j < h; ++j) {
      const std::int64_t a = p0[j] + p1[j];
      const std::int64_t b = p0[j] - p1[j];
      const std::int64_t c = p2[j] + p3[j];
      const std::int64_t d = p2[j] - p3[j];
      p0[j] = a + c;
      p1[j] = b + d;
      p2[j] = a - c;
      p3[j] = b - d;
    }
  }
}

std::size_t check_dim(std::size_t m, const SpectrumOptions& options) {
  if (m > options.max_dim) {
    throw ResourceError("walsh", "spectrum dimension m = " + std::to_string(m) + " exceeds the budget of " +
                                     std::to_string(options.max_dim));
  }
  if (m >= 63) throw ResourceError("walsh", "spectrum dimension too large");
  return std::size_t{1} << m;
}

template <typename Equation>
void require_prefix_only(const Equation& eq, std::size_t m) {
  if (!eq.coeffs.is_zero_from(m)) {
    throw InvalidInput("equation has a nonzero coordinate at or above m = " + std::to_string(m));
  }
}

template <typename Equation>
WalshSpectrum build_impl(std::span<const Equation> equations, std::size_t m, const SpectrumOptions& options) {
  WalshSpectrum s;
  s.m = m;
  s.total = equations.size();
  s.values.assign(check_dim(m, options), 0);
  for (const auto& eq : equations) {
    require_prefix_only(eq, m);
    s.values[eq.coeffs.low_bits(std::min<std::size_t>(m, eq.coeffs.size()))] += eq.rhs ? -1 : 1;
  }
  fwht_in_place(s.values);
  return s;
}

template <typename Equation>
WalshSpectrum brute_impl(std::span<const Equation> equations, std::size_t m) {
  if (m > 16) throw InvalidInput("brute_force_spectrum is limited to m <= 16");
  WalshSpectrum s;
  s.m = m;
  s.total = equations.size();
  s.values.assign(std::size_t{1} << m, 0);
  for (const auto& eq : equations) require_prefix_only(eq, m);
  for (std::uint64_t x = 0; x < s.values.size(); ++x) {
    std::int64_t score = 0;
    for (const auto& eq : equations) {
      const BitVec candidate = BitVec::from_uint(x, eq.coeffs.size());
      score += (inner_product(eq.coeffs, candidate) == eq.rhs) ? 1 : -1;
    }
    s.values[x] = score;
  }
  return s;
}

}  // namespace

void fwht_in_place(std::span<std::int64_t> values) {
  const std::size_t length = values.size();
  if (length == 0 || !std::has_single_bit(length)) {
    throw InvalidInput("Walsh transform length must be a power of two, got " + std::to_string(length));
  }
  std::int64_t* data = values.data();
  const std::size_t block = std::min(length, kBlock);
  for (std::size_t i = 0; i < length; i += block) butterflies(data + i, block, 1, block);

  std::size_t h = block;
  for (; 4 * h <= length; h *= 4) radix4_pass(data, length, h);
  if (h < length) butterflies(data, length, h, length);
}

WalshSpectrum build_spectrum(std::span<const CombinedEquation> equations, std::size_t m,
                             const SpectrumOptions& options) {
  return build_impl(equations, m, options);
}

WalshSpectrum build_spectrum(std::span<const Sample> equations, std::size_t m, const SpectrumOptions& options) {
  return build_impl(equations, m, options);
}

WalshSpectrum brute_force_spectrum(std::span<const CombinedEquation> equations, std::size_t m) {
  return brute_impl(equations, m);
}

WalshSpectrum brute_force_spectrum(std::span<const Sample> equations, std::size_t m) {
  return brute_impl(equations, m);
}

BestCandidate best_candidate(const WalshSpectrum& spectrum) {
  if (spectrum.values.empty()) throw InvalidInput("empty spectrum");
  const auto top = ranked_candidates(spectrum, 2);
  BestCandidate best;
  best.x_hat = top[0].x;
  best.score = top[0].score;
  best.second_score = top.size() > 1 ? top[1].score : top[0].score;
  return best;
}

std::vector<Candidate> ranked_candidates(const WalshSpectrum& spectrum, std::size_t k) {
  const auto before = [](const Candidate& a, const Candidate& b) {
    return a.score != b.score ? a.score > b.score : a.x < b.x;
  };
  k = std::min(k, spectrum.values.size());
  std::vector<Candidate> top;
  top.reserve(k + 1);
  for (std::uint64_t x = 0; x < spectrum.values.size(); ++x) {
    const Candidate c{x, spectrum.values[x]};
    if (top.size() == k) {
      if (k == 0 || !before(c, top.back())) continue;
      top.pop_back();
    }
    top.insert(std::upper_bound(top.begin(), top.end(), c, before), c);
  }
  return top;
}

}  // namespace lpn
