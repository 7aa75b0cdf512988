// Serial reference scans against the OpenMP kernels on graphs that force a full 3^n walk.

#include <benchmark/benchmark.h>

#include "abcover/covered.hpp"
#include "abcover/enumeration.hpp"
#include "abcover/factor.hpp"

using namespace abcover;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

// Covered graphs have no violating pair, so every scan visits all 3^n pairs.
void BM_CoverScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = complete(n);
  const ScanOptions opts{16, mode(state)};
  for (auto _ : state) benchmark::DoNotOptimize(is_ab_covered_structural(g, 1, 2, opts).covered);
  label(state);
}

void BM_DeficiencyScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = cycle(n);
  const auto spec = DegreeSpec::uniform(n, 1, 2);
  const ScanOptions opts{16, mode(state)};
  for (auto _ : state) benchmark::DoNotOptimize(has_gf_factor(g, spec, opts).exists);
  label(state);
}

void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(n).size());
}

}  // namespace

BENCHMARK(BM_CoverScan)->ArgsProduct({{10, 12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeficiencyScan)->ArgsProduct({{10, 12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateAll)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
