#include "urbanveg/coverage/placement.hpp"

#include "urbanveg/ppm/strategies.hpp"

namespace urbanveg::coverage {

std::vector<ppm::PlantSeed> place_from_coverage(const geometry::Lot& lot,
                                                const std::vector<geometry::Polygon2D>& regions,
                                                const ppm::PositionalParams& params,
                                                const ppm::StructuralParams& structural,
                                                const std::vector<growth::SpeciesPreset>& library, Rng& rng,
                                                const geometry::EnvelopeOffsets& offsets,
                                                const sampling::PoissonOptions& options) {
  params.validate();
  structural.validate();
  if (regions.empty()) return {};
  geometry::validate(lot);
  std::vector<geometry::Region> parts;
  for (const geometry::Polygon2D& p : regions) parts.push_back({geometry::oriented(p)});
  const geometry::Region active =
      geometry::intersect(geometry::unite_all(parts), ppm::placement_region(lot, offsets));
  std::vector<sampling::Sample> samples = ppm::strategy_random(active, params, rng, options);
  samples = sampling::active_only(sampling::thin(std::move(samples), params.tau, rng));
  return ppm::assign_structure(samples, structural, library, rng);
}

}  // namespace urbanveg::coverage
