#pragma once

#include <vector>

#include "urbanveg/geometry/polygon_ops.hpp"
#include "urbanveg/ppm/context.hpp"
#include "urbanveg/ppm/params.hpp"
#include "urbanveg/sampling/poisson.hpp"

namespace urbanveg::ppm {

using geometry::Lot;
using geometry::Polygon2D;
using geometry::Region;
using sampling::Sample;

struct PlaceOptions {
  geometry::EnvelopeOffsets envelope;
  sampling::PoissonOptions poisson;
};

/// Plantable region of the lot minus its building envelope: the only area
/// any strategy may place into.
Region placement_region(const Lot& lot, const geometry::EnvelopeOffsets& offsets = {});

// Position generators. Each returns all-active samples inside `region` and
// reads only the positional parameters its strategy uses.

std::vector<Sample> strategy_random(const Region& region, const PositionalParams& p, Rng& rng,
                                    const sampling::PoissonOptions& options = {});

/// Poisson sampling restricted to the band of width beta along the lot
/// boundary `outline`, intersected with `region`.
std::vector<Sample> strategy_boundary(const Region& region, const Polygon2D& outline, const PositionalParams& p,
                                      Rng& rng, const sampling::PoissonOptions& options = {});

/// k ~ U{1..pi_max} cluster disks of radius kappa centered uniformly in
/// `region`; Poisson sampling inside their union. pi_max = 0 yields nothing.
std::vector<Sample> strategy_cluster(const Region& region, const PositionalParams& p, Rng& rng,
                                     const sampling::PoissonOptions& options = {});

/// Points every delta meters along the medial axis of each part; points
/// violating separation with an earlier point are dropped.
/// Throws ParameterRangeError for delta <= 0.
std::vector<Sample> strategy_equidistant(const Region& region, const PositionalParams& p, Rng& rng);

/// One uniformly placed plant.
std::vector<Sample> strategy_single(const Region& region, const PositionalParams& p, Rng& rng);

/// Lattice cell centers jittered by up to psi * omega / 2 per lattice axis.
std::vector<Sample> strategy_regular(const Region& region, const PositionalParams& p, Rng& rng);

/// Runs one strategy on an already computed placement region (no thinning).
std::vector<Sample> generate(Strategy s, const Region& region, const Polygon2D& outline, const PositionalParams& p,
                             Rng& rng, const sampling::PoissonOptions& options = {});

/// Full placement for one lot: context update (when the context has
/// neighbors), strategy dispatch on placement_region, then tau-thinning.
/// Returns the active samples only.
std::vector<Sample> place(const PPM& ppm, const Lot& lot, const LotContext& context, Rng& rng,
                          const PlaceOptions& options = {});

/// Same as above with an empty context.
std::vector<Sample> place(const PPM& ppm, const Lot& lot, Rng& rng, const PlaceOptions& options = {});

}  // namespace urbanveg::ppm
