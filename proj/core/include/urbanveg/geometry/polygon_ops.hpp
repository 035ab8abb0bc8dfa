#pragma once

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/rng.hpp"

namespace urbanveg::geometry {

// Boolean operations. Inputs must be valid and oriented; results are
// oriented, and parts thinner than numerical noise (area < 1e-9 m²) are dropped.
Region unite(const Region& a, const Region& b);
Region unite_all(const std::vector<Region>& parts);
Region intersect(const Region& a, const Region& b);
Region subtract(const Region& a, const Region& b);

/// Lot boundary minus the union of its building footprints.
/// Throws ValidationError (naming the ring) for invalid input polygons.
Region plantable_region(const Lot& lot);

/// Part of `p` within `beta` of its boundary: p minus its inward inset.
/// Throws ParameterRangeError for beta < 0.
Region boundary_band(const Polygon2D& p, double beta);
Region boundary_band(const Region& r, double beta);

/// Inward offset by `distance` (round joins, so every removed point is
/// within `distance` of the boundary).
Region inset(const Region& r, double distance);

struct EnvelopeOffsets {
  double wall = 6.0;
  double driveway = 1.5;
};

/// Union of building footprints buffered by `wall` (mitered, capped at 2x the
/// offset) and driveways buffered by `driveway`. Entrance-tagged edges get
/// twice the wall offset. Throws ParameterRangeError for negative offsets.
Region building_envelope(const Lot& lot, EnvelopeOffsets offsets = {});

/// Uniform point in `r` by rejection against its bounding box.
/// Throws NoSampleError for an empty or zero-area region.
Vec2 random_point_in(const Region& r, Rng& rng);
Vec2 random_point_in(const Polygon2D& p, Rng& rng);

/// Regular polygon inscribed in the circle (all vertices at `radius`).
Polygon2D circle_polygon(Vec2 center, double radius, int segments = 64);

}  // namespace urbanveg::geometry
