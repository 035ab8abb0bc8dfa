#pragma once

#include <map>
#include <optional>
#include <vector>

#include "urbanveg/growth/arena.hpp"
#include "urbanveg/growth/skeleton.hpp"
#include "urbanveg/growth/species.hpp"

namespace urbanveg::growth {

using SpeciesMap = std::map<int, SpeciesPreset>;

SpeciesMap species_map(const std::vector<SpeciesPreset>& library);

struct GrowthOptions {
  /// Simulated cycles. 0 means ceil(max seed age). A seed of age a grows
  /// during the last min(floor(a), years) cycles.
  int years = 0;
  double attractor_density = 0.05;  ///< points per m³
  double default_building_height = 10.0;
  double tip_radius = 0.02;
  /// Half-angle of the cone under foliage in which another tree's
  /// attractors are shadowed.
  double shadow_half_angle_deg = 30.0;
  int regrowth_cycles = 2;
};

struct GrowthResult {
  std::vector<TreeSkeleton> trees;
  /// Attractors consumed by each tree, in seed order.
  std::vector<int> consumed;
};

/// Joint space-colonization growth of every seed in one arena.
///
/// Each cycle every attractor not shadowed for a tree is associated with
/// that tree's nearest node within its perception radius. The leader (trunk
/// apex) always extends, biased upwards; other nodes with attractors extend
/// by priority (attractor count, doubled for tips) up to the species' bud
/// budget. Steps above max_height, below ground, inside an obstacle, within
/// kill radius of another tree's node or on top of an own node are rejected.
/// Attractors within kill radius of a new node are consumed.
///
/// Consumes attractors in `arena`. Radii are left at zero.
/// Throws ConfigError when a seed's species is not in `species`.
GrowthResult grow(const std::vector<ppm::PlantSeed>& seeds, const SpeciesMap& species, GrowthArena& arena,
                  const GrowthOptions& options = {});

/// Extra growth cycles for already grown trees. Trees with a box only grow
/// inside it; trees with nullopt do not grow.
GrowthResult regrow(GrowthResult grown, const std::vector<std::optional<Box3>>& limits, const SpeciesMap& species,
                    GrowthArena& arena, int cycles, const GrowthOptions& options = {});

/// grow, then prune every seed with prune_factor < 1, regrow the pruned trees
/// for `regrowth_cycles` inside their pruned boxes, then thicken.
GrowthResult grow_lot(const std::vector<ppm::PlantSeed>& seeds, const SpeciesMap& species, GrowthArena& arena,
                      const GrowthOptions& options = {});

/// Arena from the lot (height = tallest species used) and grow_lot.
GrowthResult grow_lot(const geometry::Lot& lot, const std::vector<ppm::PlantSeed>& seeds, const SpeciesMap& species,
                      Rng& rng, const GrowthOptions& options = {});

}  // namespace urbanveg::growth
