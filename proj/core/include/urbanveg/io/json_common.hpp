#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::io {

using json = nlohmann::json;

/// Parses a JSON document; throws ParseError with the byte position on failure.
json parse_json(std::string_view text, std::string_view what);

/// Field access that reports the full path ("features[3].properties.zone")
/// in ValidationError on a missing or mistyped field.
const json& require(const json& obj, std::string_view key, std::string_view path);
double require_number(const json& obj, std::string_view key, std::string_view path);
std::string require_string(const json& obj, std::string_view key, std::string_view path);
double as_number(const json& v, std::string_view path);
long long as_integer(const json& v, std::string_view path);

/// [x, y] array.
geometry::Vec2 parse_point(const json& v, std::string_view path);
/// Array of [x, y]; a closing vertex equal to the first is dropped.
geometry::Ring parse_ring(const json& v, std::string_view path);
/// Array of rings, outer first (GeoJSON polygon coordinates).
geometry::Polygon2D parse_polygon_coords(const json& v, std::string_view path);

/// Closed ring as an array of [x, y].
json ring_to_json(const geometry::Ring& r);
json polygon_coords(const geometry::Polygon2D& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace urbanveg::io
