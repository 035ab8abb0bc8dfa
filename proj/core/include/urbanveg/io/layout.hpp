#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/io/json_common.hpp"

namespace urbanveg::io {

/// Lots of one urban layout in a local metric frame.
struct LayoutDocument {
  std::string units = "m";
  geometry::Vec2 origin;
  std::vector<geometry::Lot> lots;
  /// Per-lot "ppm" property objects, applied over the zone model.
  std::map<std::string, json> ppm_overrides;

  const geometry::Lot* find(std::string_view id) const;
};

/// Reads a GeoJSON-style FeatureCollection. Polygon features carry
/// properties {id, zone, role: "lot"} or {role: "building", parent_lot,
/// height?, entrance_edges?}; LineString features {role: "driveway",
/// parent_lot}. An optional top-level "frame" {units, origin} is kept.
///
/// Throws ParseError for malformed JSON and ValidationError for unknown
/// zones (listing the five valid ones), orphan buildings or driveways,
/// duplicate lot ids and invalid polygons.
LayoutDocument load_layout(std::string_view bytes);

json layout_to_json(const LayoutDocument& doc);
std::string dump_layout(const LayoutDocument& doc);

}  // namespace urbanveg::io
