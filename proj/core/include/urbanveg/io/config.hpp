#pragma once

#include <string_view>
#include <vector>

#include "urbanveg/geometry/polygon_ops.hpp"
#include "urbanveg/growth/species.hpp"
#include "urbanveg/io/json_common.hpp"
#include "urbanveg/io/layout.hpp"
#include "urbanveg/ppm/params.hpp"

namespace urbanveg::io {

/// Zone models, species library and envelope offsets used by `place`.
struct EngineConfig {
  ppm::ZoneProfile zones;
  std::vector<growth::SpeciesPreset> species = growth::default_species_library();
  geometry::EnvelopeOffsets envelope;
};

/// Reads {"zones": {zone: ppm}, "species": [...], "envelope": {wall,
/// driveway}}. Every key is optional; missing ones keep the defaults.
/// Unknown keys are rejected; out-of-range values raise ParameterRangeError.
EngineConfig config_from_json(const json& j);
EngineConfig load_config(std::string_view bytes);
json config_to_json(const EngineConfig& c);

/// {strategy?, positional?, structural?} applied over `base`.
ppm::PPM parse_ppm(const json& j, const ppm::PPM& base, std::string_view path);
ppm::PositionalParams parse_positional(const json& j, ppm::PositionalParams base, std::string_view path);
ppm::StructuralParams parse_structural(const json& j, ppm::StructuralParams base, std::string_view path);

json to_json(const ppm::PositionalParams& p);
json to_json(const ppm::StructuralParams& s);
json to_json(const ppm::PPM& m);

growth::SpeciesPreset parse_species(const json& j, std::string_view path);
json to_json(const growth::SpeciesPreset& s);

/// Zone model of the lot with the layout's per-lot override applied.
ppm::PPM model_for(const geometry::Lot& lot, const EngineConfig& config, const LayoutDocument* layout = nullptr);

/// Strategy list with the positional parameters each one uses and every
/// parameter's range.
json strategies_schema();

}  // namespace urbanveg::io
