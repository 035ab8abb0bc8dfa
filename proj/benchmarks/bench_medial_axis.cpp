#include <benchmark/benchmark.h>

#include "urbanveg/geometry/medial_axis.hpp"
#include "urbanveg/geometry/polygon_ops.hpp"

using namespace urbanveg;

static void BM_MedialAxisCorridor(benchmark::State& state) {
  const auto p = geometry::rectangle(0, 0, static_cast<double>(state.range(0)), 6.0);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::medial_axis(p));
}
BENCHMARK(BM_MedialAxisCorridor)->Arg(50)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_MedialAxisCircle(benchmark::State& state) {
  const auto p = geometry::circle_polygon({0, 0}, 20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::medial_axis(p));
}
BENCHMARK(BM_MedialAxisCircle)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_EquidistantAlong(benchmark::State& state) {
  const auto g = geometry::medial_axis(geometry::rectangle(0, 0, 200, 8));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::equidistant_along(g, 5.0));
}
BENCHMARK(BM_EquidistantAlong);
