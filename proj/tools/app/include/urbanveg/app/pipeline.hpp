#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "urbanveg/coverage/coverage_map.hpp"
#include "urbanveg/growth/grow.hpp"
#include "urbanveg/io/config.hpp"
#include "urbanveg/io/layout.hpp"
#include "urbanveg/io/placement_io.hpp"
#include "urbanveg/io/skeleton_io.hpp"

namespace urbanveg::app {

/// Seeds for one lot. The generator is seeded with derive_seed(seed, lot.id),
/// so a lot's result does not depend on the other lots in the request.
/// Shared by the CLI and the HTTP service.
std::vector<ppm::PlantSeed> place_lot(const geometry::Lot& lot, const ppm::PPM& model,
                                      const std::vector<growth::SpeciesPreset>& species,
                                      const geometry::EnvelopeOffsets& envelope, std::uint64_t seed);

/// Coverage-driven variant: active area from the polygonized coverage map.
std::vector<ppm::PlantSeed> place_lot_from_coverage(const geometry::Lot& lot, const coverage::CoverageMap& map,
                                                    double threshold, const ppm::PPM& model,
                                                    const std::vector<growth::SpeciesPreset>& species,
                                                    const geometry::EnvelopeOffsets& envelope, std::uint64_t seed);

struct PlaceRequest {
  std::uint64_t seed = 0;
  /// Diffuse the lot models once over this radius before placing.
  std::optional<double> context_xi;
  const coverage::CoverageMap* coverage = nullptr;
  double threshold = 0.5;
};

io::PlacementExport place_layout(const io::LayoutDocument& layout, const io::EngineConfig& config,
                                 const PlaceRequest& request);

/// Grows every lot of a placement. Lots found in `layout` use its
/// buildings as obstacles; others grow in an open arena around their seeds.
std::vector<io::LotSkeleton> grow_placement(const io::PlacementExport& placement, const io::LayoutDocument* layout,
                                            const std::vector<growth::SpeciesPreset>& species,
                                            const growth::GrowthOptions& options, std::uint64_t seed);

/// Open lot 5 m beyond the bounding box of the seeds, used when no layout
/// geometry is available.
geometry::Lot open_lot(const std::string& id, const std::vector<ppm::PlantSeed>& seeds,
                       const std::vector<geometry::Polygon2D>& buildings = {});

/// Per-lot Chamfer distance between two placements, each lot normalized to
/// its layout bounding box (or the joint bounding box of both point sets).
io::json evaluate(const io::PlacementExport& a, const io::PlacementExport& b, const io::LayoutDocument* layout);

/// FeatureCollection of the vegetated regions of each lot.
io::json polygonize_layout(const coverage::CoverageMap& map, const io::LayoutDocument& layout, double threshold);

}  // namespace urbanveg::app
