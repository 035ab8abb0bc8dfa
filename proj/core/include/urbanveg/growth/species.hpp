#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace urbanveg::growth {

enum class SpeciesClass { kTall, kShort };

std::string_view to_string(SpeciesClass c);

/// Developmental parameters of one species.
struct SpeciesPreset {
  int id = 0;
  std::string name;
  SpeciesClass species_class = SpeciesClass::kTall;
  double max_height = 12.0;         ///< meters
  double internode_length = 0.5;    ///< meters
  double perception_radius = 2.0;   ///< meters, default 4x internode
  double kill_radius = 1.0;         ///< meters, default 2x internode
  double growth_bias_up = 0.5;      ///< [0, 1]
  int annual_bud_count = 12;        ///< new internodes per tree per cycle

  /// Throws ConfigError unless 0 < kill_radius < perception_radius,
  /// internode_length > 0, max_height > 0 and bias in [0, 1].
  void validate() const;
};

/// Species preset with the standard 4x / 2x perception and kill ratios.
SpeciesPreset make_species(int id, std::string name, SpeciesClass cls, double max_height,
                           double internode_length, double growth_bias_up, int annual_bud_count);

/// Ten-species library: ids 0-4 tall-growing, 5-9 short-growing.
std::vector<SpeciesPreset> default_species_library();

/// Validates every preset and checks ids are unique.
void validate_library(const std::vector<SpeciesPreset>& library);

}  // namespace urbanveg::growth
