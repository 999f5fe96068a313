#pragma once

// Independent reference implementations used as test oracles. They share no
// code paths with the library beyond the BitVec/Sample value types and are
// deliberately naive.

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "lpn/bitvec.hpp"
#include "lpn/oracle.hpp"

namespace lpn::reference {

inline bool get_bit(const BitVec& v, std::size_t j) { return v.get(j); }

/// Parity of <a, b> by walking coordinates one at a time.
inline bool dot(const BitVec& a, const BitVec& b) {
  bool acc = false;
  for (std::size_t j = 0; j < a.size(); ++j) acc = acc != (a.get(j) && b.get(j));
  return acc;
}

inline BitVec xor_bits(const BitVec& a, const BitVec& b) {
  BitVec out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out.set(j, a.get(j) != b.get(j));
  return out;
}

/// Naive O(4^m) Walsh-Hadamard transform.
inline std::vector<std::int64_t> naive_wht(const std::vector<std::int64_t>& in) {
  std::vector<std::int64_t> out(in.size(), 0);
  for (std::uint64_t x = 0; x < in.size(); ++x) {
    for (std::uint64_t g = 0; g < in.size(); ++g) {
      out[x] += (__builtin_popcountll(g & x) & 1) ? -in[g] : in[g];
    }
  }
  return out;
}

/// Per-candidate agreement count: satisfied minus violated.
template <typename Eq>
std::vector<std::int64_t> naive_scores(const std::vector<Eq>& equations, std::size_t m) {
  std::vector<std::int64_t> out(std::size_t{1} << m, 0);
  for (std::uint64_t x = 0; x < out.size(); ++x) {
    for (const auto& eq : equations) {
      bool dotv = false;
      for (std::size_t j = 0; j < m && j < eq.coeffs.size(); ++j) dotv = dotv != (eq.coeffs.get(j) && ((x >> j) & 1));
      out[x] += dotv == eq.rhs ? 1 : -1;
    }
  }
  return out;
}

/// (coeffs as bit string, rhs, sorted indices); comparable and printable.
using EquationKey = std::tuple<std::string, bool, std::vector<std::uint32_t>>;

/// Every w-subset of sample indices whose XOR vanishes on the last b
/// coordinates and is nonzero, enumerated directly.
inline std::set<EquationKey> brute_force_combinations(const std::vector<Sample>& samples, std::size_t w,
                                                      std::size_t b) {
  std::set<EquationKey> out;
  const std::size_t count = samples.size();
  if (count < w) return out;
  const std::size_t n = samples.front().coeffs.size();
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  for (;;) {
    BitVec acc(n);
    bool rhs = false;
    for (auto i : idx) {
      acc = xor_bits(acc, samples[i].coeffs);
      rhs = rhs != samples[i].rhs;
    }
    bool tail_zero = true;
    for (std::size_t j = n - b; j < n; ++j) tail_zero = tail_zero && !acc.get(j);
    if (tail_zero && acc.popcount() > 0) {
      out.emplace(acc.to_string(), rhs, std::vector<std::uint32_t>(idx.begin(), idx.end()));
    }
    std::size_t k = w;
    while (k > 0 && idx[k - 1] == count - w + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace lpn::reference
