#include "urbanveg/growth/species.hpp"

#include <set>

#include "urbanveg/errors.hpp"

namespace urbanveg::growth {

std::string_view to_string(SpeciesClass c) { return c == SpeciesClass::kTall ? "tall" : "short"; }

void SpeciesPreset::validate() const {
  const std::string f = "species[" + std::to_string(id) + "]";
  if (!(internode_length > 0.0)) throw ConfigError(f + ".internode_length", f + ": internode_length must be > 0");
  if (!(max_height > 0.0)) throw ConfigError(f + ".max_height", f + ": max_height must be > 0");
  if (!(kill_radius > 0.0 && kill_radius < perception_radius))
    throw ConfigError(f + ".kill_radius", f + ": requires 0 < kill_radius < perception_radius");
  if (!(growth_bias_up >= 0.0 && growth_bias_up <= 1.0))
    throw ConfigError(f + ".growth_bias_up", f + ": growth_bias_up must be in [0, 1]");
  if (annual_bud_count < 1) throw ConfigError(f + ".annual_bud_count", f + ": annual_bud_count must be >= 1");
}

SpeciesPreset make_species(int id, std::string name, SpeciesClass cls, double max_height,
                           double internode_length, double growth_bias_up, int annual_bud_count) {
  SpeciesPreset s;
  s.id = id;
  s.name = std::move(name);
  s.species_class = cls;
  s.max_height = max_height;
  s.internode_length = internode_length;
  s.perception_radius = 4.0 * internode_length;
  s.kill_radius = 2.0 * internode_length;
  s.growth_bias_up = growth_bias_up;
  s.annual_bud_count = annual_bud_count;
  return s;
}

std::vector<SpeciesPreset> default_species_library() {
  using enum SpeciesClass;
  return {
      make_species(0, "plane", kTall, 18.0, 0.60, 0.55, 14),
      make_species(1, "linden", kTall, 16.0, 0.55, 0.50, 14),
      make_species(2, "oak", kTall, 15.0, 0.50, 0.40, 16),
      make_species(3, "poplar", kTall, 20.0, 0.65, 0.80, 10),
      make_species(4, "maple", kTall, 14.0, 0.50, 0.50, 14),
      make_species(5, "hornbeam", kShort, 6.0, 0.30, 0.40, 10),
      make_species(6, "hazel", kShort, 4.0, 0.25, 0.30, 10),
      make_species(7, "boxwood", kShort, 2.5, 0.20, 0.30, 8),
      make_species(8, "lilac", kShort, 4.5, 0.25, 0.45, 10),
      make_species(9, "yew", kShort, 5.0, 0.30, 0.50, 10),
  };
}

void validate_library(const std::vector<SpeciesPreset>& library) {
  std::set<int> ids;
  for (const SpeciesPreset& s : library) {
    s.validate();
    if (!ids.insert(s.id).second)
      throw ConfigError("species", "duplicate species id " + std::to_string(s.id));
  }
}

}  // namespace urbanveg::growth
