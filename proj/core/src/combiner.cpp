#include "lpn/combiner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lpn/errors.hpp"

namespace lpn {

IndexSet::IndexSet(std::initializer_list<std::uint32_t> indices) {
  for (auto i : indices) push_back(i);
}

void IndexSet::push_back(std::uint32_t index) {
  if (size_ == kCapacity) throw InvalidInput("index set capacity exceeded");
  if (size_ > 0 && items_[size_ - 1] >= index) throw InvalidInput("index set must be strictly increasing");
  items_[size_++] = index;
}

bool IndexSet::disjoint(const IndexSet& other) const noexcept {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < size_ && j < other.size_) {
    if (items_[i] == other.items_[j]) return false;
    if (items_[i] < other.items_[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

IndexSet IndexSet::merge(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::merge(a.items_.begin(), a.items_.begin() + a.size_, b.items_.begin(), b.items_.begin() + b.size_,
             out.items_.begin());
  out.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
  return out;
}

bool operator<(const IndexSet& a, const IndexSet& b) noexcept {
  return std::lexicographical_compare(a.items_.begin(), a.items_.begin() + a.size_, b.items_.begin(),
                                      b.items_.begin() + b.size_);
}

bool canonical_less(const CombinedEquation& a, const CombinedEquation& b) noexcept {
  if (const int c = a.coeffs.compare_bytes(b.coeffs); c != 0) return c < 0;
  if (a.rhs != b.rhs) return !a.rhs;
  return a.indices < b.indices;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double result = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    result *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return std::round(result);
}

std::vector<HalfCombination> enumerate_halves(std::span<const Sample> samples, std::size_t half_weight,
                                              std::size_t max_halves) {
  if (half_weight < 1 || half_weight > kMaxHalfWeight) {
    throw InvalidInput("half weight must be between 1 and " + std::to_string(kMaxHalfWeight));
  }
  const std::size_t count_n = samples.size();
  const double count = binomial(count_n, half_weight);
  if (count > static_cast<double>(max_halves)) {
    std::ostringstream os;
    os << "C(N, " << half_weight << ") = C(" << count_n << ", " << half_weight << ") = " << count
       << " half-combinations exceed the budget of " << max_halves;
    throw ResourceError("combine", os.str());
  }
  if (count_n > 0xffffffffULL) throw ResourceError("combine", "sample count exceeds 2^32 index range");

  std::vector<HalfCombination> halves;
  halves.reserve(static_cast<std::size_t>(count));
  if (count_n < half_weight) return halves;

  // Lexicographic walk over index tuples idx[0] < idx[1] < ... .
  std::vector<std::size_t> idx(half_weight);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    HalfCombination h;
    h.coeffs = samples[idx[0]].coeffs;
    h.rhs = samples[idx[0]].rhs;
    h.indices.push_back(static_cast<std::uint32_t>(idx[0]));
    for (std::size_t k = 1; k < half_weight; ++k) {
      h.coeffs ^= samples[idx[k]].coeffs;
      h.rhs = h.rhs != samples[idx[k]].rhs;
      h.indices.push_back(static_cast<std::uint32_t>(idx[k]));
    }
    halves.push_back(std::move(h));

    std::size_t k = half_weight;
    while (k > 0 && idx[k - 1] == count_n - half_weight + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < half_weight; ++j) idx[j] = idx[j - 1] + 1;
  }
  return halves;
}

namespace {

// Packs coordinates [n - b, n) of v into `out` (ceil(b/64) words).
void suffix_key(const BitVec& v, std::size_t b, std::span<std::uint64_t> out) {
  const std::size_t n = v.size();
  const std::size_t from = n - b;
  const auto words = v.words();
  const std::size_t base = from / 64;
  const std::size_t shift = from % 64;
  for (std::size_t w = 0; w < out.size(); ++w) {
    std::uint64_t value = words[base + w] >> shift;
    if (shift != 0 && base + w + 1 < words.size()) value |= words[base + w + 1] << (64 - shift);
    out[w] = value;
  }
  const std::size_t rem = b % 64;
  if (rem != 0 && !out.empty()) out.back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace

std::vector<CombinedEquation> bucket_and_pair(std::span<const HalfCombination> halves, std::size_t b_int) {
  std::vector<CombinedEquation> out;
  if (halves.empty()) return out;
  const std::size_t n = halves.front().coeffs.size();
  if (b_int > n) throw InvalidInput("b' exceeds the dimension");

  const std::size_t key_words = (b_int + 63) / 64;
  std::vector<std::uint64_t> keys(halves.size() * key_words);
  for (std::size_t i = 0; i < halves.size(); ++i) {
    if (halves[i].coeffs.size() != n) throw InvalidInput("half-combinations of mixed dimension");
    suffix_key(halves[i].coeffs, b_int, std::span(keys).subspan(i * key_words, key_words));
  }
  const auto key_of = [&](std::size_t i) { return std::span<const std::uint64_t>(keys).subspan(i * key_words, key_words); };

  // Sort-then-scan grouping keeps memory at O(#halves).
  std::vector<std::uint32_t> order(halves.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto ka = key_of(a);
    const auto kb = key_of(b);
    if (!std::equal(ka.begin(), ka.end(), kb.begin())) {
      return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
    }
    return a < b;
  });

  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    const auto k0 = key_of(order[start]);
    while (end < order.size()) {
      const auto k = key_of(order[end]);
      if (!std::equal(k.begin(), k.end(), k0.begin())) break;
      ++end;
    }
    for (std::size_t i = start; i < end; ++i) {
      const HalfCombination& a = halves[order[i]];
      for (std::size_t j = i + 1; j < end; ++j) {
        const HalfCombination& b = halves[order[j]];
        if (!a.indices.disjoint(b.indices)) continue;
        BitVec coeffs = bv_xor(a.coeffs, b.coeffs);
        if (coeffs.is_zero()) continue;
        out.push_back(CombinedEquation{std::move(coeffs), a.rhs != b.rhs, IndexSet::merge(a.indices, b.indices)});
      }
    }
    start = end;
  }

  // A w'-subset splits into halves in several ways, and every split lands in
  // the same bucket; keep one copy per index set.
  // Sort compact (leading byte-order word, position) keys and permute once;
  // moving whole equations through the sort dominates otherwise.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> rank(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto words = out[i].coeffs.words();
    rank[i] = {words.empty() ? 0 : __builtin_bswap64(words[0]), static_cast<std::uint32_t>(i)};
  }
  std::sort(rank.begin(), rank.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return canonical_less(out[a.second], out[b.second]);
  });
  std::vector<CombinedEquation> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : rank) {
    if (!sorted.empty() && sorted.back() == out[i]) continue;
    sorted.push_back(std::move(out[i]));
  }
  return sorted;
}

CombineResult combine(std::span<const Sample> samples, const Rational& eps, unsigned w_int, std::size_t b_int,
                      const CombineOptions& options) {
  if (w_int < 2 || w_int % 2 != 0) throw InvalidInput("w' must be even and >= 2");
  if (!samples.empty() && b_int > samples.front().coeffs.size()) throw InvalidInput("b' exceeds the dimension");
  const std::size_t half = w_int / 2;

  CombineResult result;
  result.bias = piling_up_bias(eps, w_int);
  const auto halves = enumerate_halves(samples, half, options.max_halves);
  result.halves = halves.size();
  result.equations = bucket_and_pair(halves, b_int);

  result.expected = binomial(samples.size(), w_int) / std::ldexp(1.0, static_cast<int>(b_int));
  result.threshold = required_samples(result.bias).convert_to<double>();
  result.shortfall = static_cast<double>(result.equations.size()) < result.threshold;
  return result;
}

}  // namespace lpn
