#include <benchmark/benchmark.h>

#include "lpn/combiner.hpp"
#include "lpn/oracle.hpp"

namespace {

void BM_PairwiseCombine(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto b = static_cast<std::size_t>(state.range(1));
  const auto inst = lpn::generate_instance(32, lpn::Rational(1, 8), count, 1);
  std::size_t produced = 0;
  for (auto _ : state) {
    auto result = lpn::combine(inst.samples, inst.eps, 2, b);
    produced = result.equations.size();
    benchmark::DoNotOptimize(result);
  }
  state.counters["equations"] = static_cast<double>(produced);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseCombine)
    ->ArgsProduct({benchmark::CreateRange(1 << 10, 1 << 14, 2), {4}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);
BENCHMARK(BM_PairwiseCombine)->ArgsProduct({{1 << 16}, {16, 20, 24}})->Unit(benchmark::kMillisecond);

void BM_QuadCombine(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto inst = lpn::generate_instance(40, lpn::Rational(1, 8), count, 2);
  for (auto _ : state) {
    auto result = lpn::combine(inst.samples, inst.eps, 4, 24);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_QuadCombine)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_EnumerateHalves(benchmark::State& state) {
  const auto inst = lpn::generate_instance(64, lpn::Rational(1, 8), static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    auto halves = lpn::enumerate_halves(inst.samples, 2);
    benchmark::DoNotOptimize(halves);
  }
}
BENCHMARK(BM_EnumerateHalves)->Arg(256)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace
