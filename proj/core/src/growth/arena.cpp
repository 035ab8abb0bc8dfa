#include "urbanveg/growth/arena.hpp"

#include <algorithm>

#include "urbanveg/errors.hpp"

namespace urbanveg::growth {

bool Obstacle::contains(Vec3 p) const {
  return p.z >= 0.0 && p.z <= height && geometry::contains(footprint, {p.x, p.y});
}

std::vector<Obstacle> obstacles_of(const geometry::Lot& lot, double default_height) {
  std::vector<Obstacle> out;
  for (const geometry::Building& b : lot.buildings)
    out.push_back({geometry::oriented(b.footprint), b.height.value_or(default_height)});
  return out;
}

std::vector<Vec3> scatter_attractors(const Box3& bounds, const std::vector<Obstacle>& obstacles, double density,
                                     Rng& rng) {
  if (!(density > 0.0)) throw ParameterRangeError("attractor_density", "attractor density must be > 0");
  const double volume = bounds.volume();
  const long long count = round_half_away(density * volume);
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(std::max(0LL, count)));
  for (long long i = 0; i < count; ++i) {
    const Vec3 p{rng.uniform(bounds.min.x, bounds.max.x), rng.uniform(bounds.min.y, bounds.max.y),
                 rng.uniform(bounds.min.z, bounds.max.z)};
    const bool inside = std::any_of(obstacles.begin(), obstacles.end(), [&](const Obstacle& o) { return o.contains(p); });
    if (!inside) out.push_back(p);
  }
  return out;
}

bool GrowthArena::blocked(Vec3 p) const {
  return std::any_of(obstacles.begin(), obstacles.end(), [&](const Obstacle& o) { return o.contains(p); });
}

std::size_t GrowthArena::remaining() const { return static_cast<std::size_t>(std::count(consumed.begin(), consumed.end(), false)); }

GrowthArena make_arena(const geometry::Lot& lot, double height, double density, Rng& rng,
                       double default_building_height) {
  const geometry::Bbox bb = geometry::bbox(lot.boundary);
  GrowthArena arena;
  arena.bounds = {{bb.min.x, bb.min.y, 0.0}, {bb.max.x, bb.max.y, height}};
  arena.obstacles = obstacles_of(lot, default_building_height);
  arena.attractors = scatter_attractors(arena.bounds, arena.obstacles, density, rng);
  arena.consumed.assign(arena.attractors.size(), false);
  return arena;
}

}  // namespace urbanveg::growth
