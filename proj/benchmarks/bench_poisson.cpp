#include <benchmark/benchmark.h>

#include "urbanveg/geometry/polygon_ops.hpp"
#include "urbanveg/sampling/poisson.hpp"

using namespace urbanveg;

static void BM_PoissonSquare(benchmark::State& state) {
  const geometry::Region region{geometry::rectangle(0, 0, static_cast<double>(state.range(0)),
                                                    static_cast<double>(state.range(0)))};
  const sampling::RadiusModel model{2.0, 0.5};
  std::uint64_t seed = 0;
  std::size_t n = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    const auto s = sampling::poisson_variable_radii(region, model, rng);
    n += s.size();
    benchmark::DoNotOptimize(s.data());
  }
  state.counters["samples"] = benchmark::Counter(static_cast<double>(n), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_PoissonSquare)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_PoissonHoled(benchmark::State& state) {
  geometry::Polygon2D p = geometry::circle_polygon({0, 0}, 40.0, 96);
  p.holes.push_back(geometry::circle_polygon({0, 0}, 15.0, 48).outer);
  const geometry::Region region{geometry::oriented(p)};
  const sampling::RadiusModel model{1.5, 0.3};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(sampling::poisson_variable_radii(region, model, rng));
  }
}
BENCHMARK(BM_PoissonHoled)->Unit(benchmark::kMillisecond);
