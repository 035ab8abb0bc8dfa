#include "urbanveg/io/config.hpp"

#include "urbanveg/errors.hpp"

namespace urbanveg::io {

namespace {

void reject_unknown(const json& j, std::initializer_list<std::string_view> known, std::string_view path) {
  if (!j.is_object()) throw ValidationError(std::string(path), std::string(path) + " must be an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (std::string_view k : known) ok = ok || key == k;
    if (!ok) {
      const std::string field = path.empty() ? key : std::string(path) + "." + key;
      throw ValidationError(field, "unknown field '" + field + "'");
    }
  }
}

/// Reads parameters [first, last) of the vector by name.
void read_params(const json& j, ppm::ParamVector& v, std::size_t first, std::size_t last, std::string_view path) {
  if (!j.is_object()) throw ValidationError(std::string(path), std::string(path) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (std::size_t i = first; i < last; ++i) {
      const ppm::ParamInfo& info = ppm::param_table()[i];
      if (key != info.name) continue;
      const std::string field = std::string(path) + "." + key;
      v[i] = info.integer ? static_cast<double>(as_integer(value, field)) : as_number(value, field);
      found = true;
    }
    if (!found) throw ValidationError(std::string(path) + "." + key, "unknown parameter '" + std::string(path) + "." + key + "'");
  }
}

}  // namespace

ppm::PositionalParams parse_positional(const json& j, ppm::PositionalParams base, std::string_view path) {
  ppm::StructuralParams s;
  ppm::ParamVector v = ppm::to_vector(base, s);
  read_params(j, v, 0, ppm::kPositionalCount, path);
  ppm::from_vector(v, base, s);
  return base;
}

ppm::StructuralParams parse_structural(const json& j, ppm::StructuralParams base, std::string_view path) {
  ppm::PositionalParams p;
  ppm::ParamVector v = ppm::to_vector(p, base);
  read_params(j, v, ppm::kPositionalCount, ppm::kParamCount, path);
  ppm::from_vector(v, p, base);
  return base;
}

ppm::PPM parse_ppm(const json& j, const ppm::PPM& base, std::string_view path) {
  reject_unknown(j, {"strategy", "positional", "structural"}, path);
  ppm::PPM out = base;
  const std::string prefix = path.empty() ? "" : std::string(path) + ".";
  if (const auto it = j.find("strategy"); it != j.end()) {
    if (!it->is_string()) throw ValidationError(prefix + "strategy", "strategy must be a string");
    const auto s = ppm::parse_strategy(it->get<std::string>());
    if (!s)
      throw ValidationError(prefix + "strategy", "unknown strategy '" + it->get<std::string>() +
                                                     "'; valid strategies are R, B, C, E, S, I or their names");
    out.strategy = *s;
  }
  if (const auto it = j.find("positional"); it != j.end())
    out.positional = parse_positional(*it, out.positional, "positional");
  if (const auto it = j.find("structural"); it != j.end())
    out.structural = parse_structural(*it, out.structural, "structural");
  out.validate();
  return out;
}

json to_json(const ppm::PositionalParams& p) {
  const ppm::ParamVector v = ppm::to_vector(p, {});
  json out = json::object();
  for (std::size_t i = 0; i < ppm::kPositionalCount; ++i) {
    const ppm::ParamInfo& info = ppm::param_table()[i];
    if (info.integer) out[std::string(info.name)] = static_cast<long long>(v[i]);
    else out[std::string(info.name)] = v[i];
  }
  return out;
}

json to_json(const ppm::StructuralParams& s) {
  const ppm::ParamVector v = ppm::to_vector({}, s);
  json out = json::object();
  for (std::size_t i = ppm::kPositionalCount; i < ppm::kParamCount; ++i) {
    const ppm::ParamInfo& info = ppm::param_table()[i];
    if (info.integer) out[std::string(info.name)] = static_cast<long long>(v[i]);
    else out[std::string(info.name)] = v[i];
  }
  return out;
}

json to_json(const ppm::PPM& m) {
  return {{"strategy", std::string(1, ppm::symbol(m.strategy))},
          {"positional", to_json(m.positional)},
          {"structural", to_json(m.structural)}};
}

growth::SpeciesPreset parse_species(const json& j, std::string_view path) {
  reject_unknown(j,
                 {"id", "name", "class", "max_height", "internode_length", "perception_radius", "kill_radius",
                  "growth_bias_up", "annual_bud_count"},
                 path);
  const std::string p(path);
  const std::string cls = require_string(j, "class", p);
  if (cls != "tall" && cls != "short") throw ValidationError(p + ".class", "class must be 'tall' or 'short'");
  const double internode = require_number(j, "internode_length", p);
  growth::SpeciesPreset s = growth::make_species(
      static_cast<int>(as_integer(require(j, "id", p), p + ".id")), j.value("name", std::string()),
      cls == "tall" ? growth::SpeciesClass::kTall : growth::SpeciesClass::kShort, require_number(j, "max_height", p),
      internode, require_number(j, "growth_bias_up", p),
      static_cast<int>(as_integer(require(j, "annual_bud_count", p), p + ".annual_bud_count")));
  if (j.contains("perception_radius")) s.perception_radius = require_number(j, "perception_radius", p);
  if (j.contains("kill_radius")) s.kill_radius = require_number(j, "kill_radius", p);
  s.validate();
  return s;
}

json to_json(const growth::SpeciesPreset& s) {
  return {{"id", s.id},
          {"name", s.name},
          {"class", growth::to_string(s.species_class)},
          {"max_height", s.max_height},
          {"internode_length", s.internode_length},
          {"perception_radius", s.perception_radius},
          {"kill_radius", s.kill_radius},
          {"growth_bias_up", s.growth_bias_up},
          {"annual_bud_count", s.annual_bud_count}};
}

EngineConfig config_from_json(const json& j) {
  reject_unknown(j, {"zones", "species", "envelope"}, "");
  EngineConfig c;
  if (const auto it = j.find("zones"); it != j.end()) {
    if (!it->is_object()) throw ValidationError("zones", "zones must be an object");
    for (const auto& [name, value] : it->items()) {
      const auto z = geometry::parse_zone(name);
      if (!z)
        throw ValidationError("zones." + name,
                              "unknown zone '" + name + "'; valid zones are: residential, commercial, industrial, street, other");
      c.zones.set(*z, parse_ppm(value, c.zones.at(*z), "zones." + name));
    }
  }
  if (const auto it = j.find("species"); it != j.end()) {
    if (!it->is_array() || it->empty()) throw ConfigError("species", "species must be a non-empty array");
    c.species.clear();
    for (std::size_t i = 0; i < it->size(); ++i) c.species.push_back(parse_species((*it)[i], "species[" + std::to_string(i) + "]"));
    growth::validate_library(c.species);
  }
  if (const auto it = j.find("envelope"); it != j.end()) {
    reject_unknown(*it, {"wall", "driveway"}, "envelope");
    if (it->contains("wall")) c.envelope.wall = require_number(*it, "wall", "envelope");
    if (it->contains("driveway")) c.envelope.driveway = require_number(*it, "driveway", "envelope");
    if (c.envelope.wall < 0.0) throw ParameterRangeError("envelope.wall", "envelope.wall must be >= 0");
    if (c.envelope.driveway < 0.0) throw ParameterRangeError("envelope.driveway", "envelope.driveway must be >= 0");
  }
  return c;
}

EngineConfig load_config(std::string_view bytes) { return config_from_json(parse_json(bytes, "ppm-config")); }

json config_to_json(const EngineConfig& c) {
  json zones = json::object();
  for (geometry::Zone z : geometry::kAllZones) zones[std::string(geometry::to_string(z))] = to_json(c.zones.at(z));
  json species = json::array();
  for (const growth::SpeciesPreset& s : c.species) species.push_back(to_json(s));
  return {{"zones", zones},
          {"species", species},
          {"envelope", {{"wall", c.envelope.wall}, {"driveway", c.envelope.driveway}}}};
}

ppm::PPM model_for(const geometry::Lot& lot, const EngineConfig& config, const LayoutDocument* layout) {
  const ppm::PPM& base = config.zones.at(lot.zone);
  if (layout != nullptr) {
    if (const auto it = layout->ppm_overrides.find(lot.id); it != layout->ppm_overrides.end())
      return parse_ppm(it->second, base, "lot '" + lot.id + "' ppm");
  }
  return base;
}

json strategies_schema() {
  json params = json::array();
  for (const ppm::ParamInfo& info : ppm::param_table()) {
    params.push_back({{"name", info.name},
                      {"group", static_cast<std::size_t>(info.param) < ppm::kPositionalCount ? "positional" : "structural"},
                      {"min", info.lo},
                      {"max", info.hi},
                      {"integer", info.integer},
                      {"unit", info.unit},
                      {"description", info.meaning}});
  }
  json strategies = json::array();
  for (ppm::Strategy s : ppm::kAllStrategies) {
    json used = json::array();
    for (std::size_t i = 0; i < ppm::kPositionalCount; ++i) {
      const ppm::ParamInfo& info = ppm::param_table()[i];
      if (ppm::uses(s, info.param)) used.push_back(info.name);
    }
    strategies.push_back({{"symbol", std::string(1, ppm::symbol(s))}, {"name", ppm::to_string(s)}, {"positional", used}});
  }
  return {{"strategies", strategies}, {"parameters", params}};
}

}  // namespace urbanveg::io
