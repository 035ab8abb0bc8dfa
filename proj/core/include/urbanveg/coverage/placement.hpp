#pragma once

#include <vector>

#include "urbanveg/geometry/polygon_ops.hpp"
#include "urbanveg/growth/species.hpp"
#include "urbanveg/ppm/params.hpp"
#include "urbanveg/ppm/structure.hpp"
#include "urbanveg/sampling/poisson.hpp"

namespace urbanveg::coverage {

/// Coverage-driven placement: random-strategy Poisson sampling on the union
/// of `regions` intersected with the lot's plantable region minus its
/// building envelope, then tau-thinning and structure assignment.
std::vector<ppm::PlantSeed> place_from_coverage(const geometry::Lot& lot,
                                                const std::vector<geometry::Polygon2D>& regions,
                                                const ppm::PositionalParams& params,
                                                const ppm::StructuralParams& structural,
                                                const std::vector<growth::SpeciesPreset>& library, Rng& rng,
                                                const geometry::EnvelopeOffsets& offsets = {},
                                                const sampling::PoissonOptions& options = {});

}  // namespace urbanveg::coverage
