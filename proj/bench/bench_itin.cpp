// Serial reference against the OpenMP paths.

#include <benchmark/benchmark.h>

#include "itin/figure1.hpp"
#include "itin/theorems.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(itin::enumerate_kneading_serial(n));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(itin::enumerate_kneading(n));
}

void BM_Figure1Serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(itin::figure1(n, 12, false));
}

void BM_Figure1Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(itin::figure1(n, 12, true));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Figure1Serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Figure1Parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
