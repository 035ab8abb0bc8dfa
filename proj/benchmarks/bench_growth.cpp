#include <benchmark/benchmark.h>

#include "urbanveg/growth/grow.hpp"
#include "urbanveg/ppm/structure.hpp"

using namespace urbanveg;

namespace {

geometry::Lot open_lot() {
  geometry::Lot lot;
  lot.id = "bench";
  lot.boundary = geometry::rectangle(0, 0, 30, 30);
  geometry::Building b;
  b.footprint = geometry::rectangle(12, 12, 18, 18);
  lot.buildings.push_back(b);
  return lot;
}

std::vector<ppm::PlantSeed> seeds(int n) {
  std::vector<ppm::PlantSeed> out;
  for (int i = 0; i < n; ++i) {
    ppm::PlantSeed s;
    s.position = {3.0 + 6.0 * (i % 4), 3.0 + 24.0 * (i / 4)};
    s.species = i % 5;
    s.age = 15.0;
    s.prune_factor = i % 2 ? 0.8 : 1.0;
    out.push_back(s);
  }
  return out;
}

}  // namespace

static void BM_GrowLot(benchmark::State& state) {
  const auto lot = open_lot();
  const auto species = growth::species_map(growth::default_species_library());
  const auto s = seeds(static_cast<int>(state.range(0)));
  growth::GrowthOptions opt;
  opt.attractor_density = 0.2;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(growth::grow_lot(lot, s, species, rng, opt));
  }
}
BENCHMARK(BM_GrowLot)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Thicken(benchmark::State& state) {
  growth::TreeSkeleton t;
  t.nodes.push_back({{0, 0, 0}, 0.0, -1});
  Rng rng(1);
  for (int i = 1; i < state.range(0); ++i)
    t.nodes.push_back({{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0, 10)}, 0.0,
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(i)))});
  for (auto _ : state) benchmark::DoNotOptimize(growth::thicken(t, 0.02));
}
BENCHMARK(BM_Thicken)->Arg(1000)->Arg(10000);
