#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "lpn/oracle.hpp"
#include "lpn/random.hpp"
#include "lpn/walsh.hpp"

namespace {

void BM_Fwht(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<std::int64_t> values(std::size_t{1} << m);
  lpn::SplitMix64 rng(7);
  for (auto& v : values) v = static_cast<std::int64_t>(rng.below(2001)) - 1000;
  for (auto _ : state) {
    lpn::fwht_in_place(values);
    benchmark::ClobberMemory();
  }
  state.SetComplexityN(static_cast<std::int64_t>(m) << m);
}
BENCHMARK(BM_Fwht)->DenseRange(12, 24, 2)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

void BM_BuildSpectrum(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto inst = lpn::generate_instance(m, lpn::Rational(1, 8), static_cast<std::size_t>(state.range(1)), 11);
  for (auto _ : state) {
    auto spectrum = lpn::build_spectrum(std::span<const lpn::Sample>(inst.samples), m);
    benchmark::DoNotOptimize(spectrum);
  }
}
BENCHMARK(BM_BuildSpectrum)->ArgsProduct({{16, 20}, {1 << 12, 1 << 16}})->Unit(benchmark::kMillisecond);

void BM_RankedCandidates(benchmark::State& state) {
  const std::size_t m = 20;
  const auto inst = lpn::generate_instance(m, lpn::Rational(1, 8), 1 << 14, 12);
  const auto spectrum = lpn::build_spectrum(std::span<const lpn::Sample>(inst.samples), m);
  for (auto _ : state) {
    auto top = lpn::ranked_candidates(spectrum, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(top);
  }
}
BENCHMARK(BM_RankedCandidates)->Arg(1)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
