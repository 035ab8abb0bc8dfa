#pragma once

#include <vector>

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/growth/skeleton.hpp"
#include "urbanveg/rng.hpp"

namespace urbanveg::growth {

/// Building footprint extruded from the ground to `height`.
struct Obstacle {
  geometry::Polygon2D footprint;
  double height = 10.0;

  /// Closed volume: points on the walls or roof count as inside.
  bool contains(Vec3 p) const;
};

/// One obstacle per building; buildings without a height get `default_height`.
std::vector<Obstacle> obstacles_of(const geometry::Lot& lot, double default_height = 10.0);

/// round(density * volume(bounds)) uniform points in `bounds`, minus those
/// inside any obstacle, so the expected count is density * free volume.
/// Throws ParameterRangeError for density <= 0.
std::vector<Vec3> scatter_attractors(const Box3& bounds, const std::vector<Obstacle>& obstacles, double density,
                                     Rng& rng);

/// Shared space the trees of one lot grow into.
struct GrowthArena {
  Box3 bounds;
  std::vector<Obstacle> obstacles;
  std::vector<Vec3> attractors;
  std::vector<bool> consumed;

  bool blocked(Vec3 p) const;
  std::size_t remaining() const;
};

/// Arena over the lot's bounding box from the ground to `height`, with the
/// lot's buildings as obstacles and freshly scattered attractors.
GrowthArena make_arena(const geometry::Lot& lot, double height, double density, Rng& rng,
                       double default_building_height = 10.0);

}  // namespace urbanveg::growth
