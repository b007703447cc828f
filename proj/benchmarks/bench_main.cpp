#include "polyreg/harness.hpp"

#include <benchmark/benchmark.h>

using namespace polyreg;

static void BM_RandomGenericPolygon(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto poly = random_generic_polygon(n, seed++);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_RandomGenericPolygon)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_BuildArrangement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolygonSpec poly = random_generic_polygon(n, 42);
  for (auto _ : state) {
    auto arr = build_arrangement(poly);
    benchmark::DoNotOptimize(arr);
  }
}
BENCHMARK(BM_BuildArrangement)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_EnumerateRegions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChordArrangement arr = build_arrangement(random_generic_polygon(n, 42));
  for (auto _ : state) {
    auto regions = enumerate_regions(arr);
    benchmark::DoNotOptimize(regions);
  }
}
BENCHMARK(BM_EnumerateRegions)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_CensusClassify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = census_report(n);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CensusClassify)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

static void BM_RealizeCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cycles = enumerate_two_standard(n);
  std::size_t at = 0;
  std::uint64_t seed = 7;
  for (auto _ : state) {
    auto poly = realize_cycle(cycles[at], seed++);
    benchmark::DoNotOptimize(poly);
    at = (at + 1) % cycles.size();
  }
}
BENCHMARK(BM_RealizeCycle)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
