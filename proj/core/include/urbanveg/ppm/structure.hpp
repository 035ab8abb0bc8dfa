#pragma once

#include <vector>

#include "urbanveg/growth/species.hpp"
#include "urbanveg/ppm/params.hpp"
#include "urbanveg/sampling/poisson.hpp"

namespace urbanveg::ppm {

/// Position, age, species and pruning factor of one plant, plus the
/// envelope radius it was placed with.
struct PlantSeed {
  geometry::Vec2 position;
  double radius = 0.0;
  double age = 0.0;
  int species = 0;
  double prune_factor = 1.0;

  friend bool operator==(const PlantSeed&, const PlantSeed&) = default;
};

/// Assigns species, age and pruning factor to every sample.
///
/// round(rho n) seeds are tall-class, the rest short-class. lambda species
/// are drawn from the library, from the classes in use first (both classes
/// represented when both are needed). The class with more seeds (tall on
/// ties) gets a dominant species held by exactly min(round((1 - theta) n), class size) seeds; every other
/// seed gets a random non-dominant species of its class where one exists.
/// With lambda = 1 every seed gets the same species.
/// Ages are uniform in [alpha_max / 2, alpha_max].
///
/// Throws ConfigError for an empty library, fewer than lambda species, or a
/// required class missing from the library.
std::vector<PlantSeed> assign_structure(const std::vector<sampling::Sample>& samples, const StructuralParams& s,
                                        const std::vector<growth::SpeciesPreset>& library, Rng& rng);

}  // namespace urbanveg::ppm
