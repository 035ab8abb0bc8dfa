#include <benchmark/benchmark.h>

#include "urbanveg/metrics/chamfer.hpp"
#include "urbanveg/rng.hpp"

using namespace urbanveg;

static std::vector<geometry::Vec2> cloud(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<geometry::Vec2> v(n);
  for (auto& p : v) p = {rng.uniform(0, 100), rng.uniform(0, 100)};
  return v;
}

static void BM_Chamfer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cloud(n, 1), b = cloud(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::chamfer(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Chamfer)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

static void BM_SpacingStats(benchmark::State& state) {
  const auto a = cloud(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(metrics::spacing_stats(a));
}
BENCHMARK(BM_SpacingStats)->Arg(1000)->Arg(10000);
