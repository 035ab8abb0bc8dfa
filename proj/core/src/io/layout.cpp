#include "urbanveg/io/layout.hpp"

#include <set>

#include "urbanveg/errors.hpp"

namespace urbanveg::io {

const geometry::Lot* LayoutDocument::find(std::string_view id) const {
  for (const geometry::Lot& l : lots)
    if (l.id == id) return &l;
  return nullptr;
}

namespace {

std::string valid_zones() {
  std::string s;
  for (geometry::Zone z : geometry::kAllZones) {
    if (!s.empty()) s += ", ";
    s += geometry::to_string(z);
  }
  return s;
}

struct Pending {
  std::string parent;
  std::string path;
  json feature;
};

}  // namespace

LayoutDocument load_layout(std::string_view bytes) {
  const json doc = parse_json(bytes, "layout");
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection")
    throw ValidationError("type", "layout must be a GeoJSON FeatureCollection");
  LayoutDocument out;
  if (const auto it = doc.find("frame"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("frame", "frame must be an object");
    out.units = it->value("units", std::string("m"));
    if (out.units != "m") throw ValidationError("frame.units", "only metric frames (units \"m\") are supported");
    if (it->contains("origin")) out.origin = parse_point((*it)["origin"], "frame.origin");
  }
  const json& features = require(doc, "features", "");
  if (!features.is_array()) throw ValidationError("features", "features must be an array");

  std::vector<Pending> children;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string path = "features[" + std::to_string(i) + "]";
    const json& f = features[i];
    const json& props = require(f, "properties", path);
    const std::string role = require_string(props, "role", path + ".properties");
    if (role == "lot") {
      geometry::Lot lot;
      lot.id = require_string(props, "id", path + ".properties");
      if (lot.id.empty()) throw ValidationError(path + ".properties.id", "lot id must not be empty");
      if (!ids.insert(lot.id).second) throw ValidationError(path + ".properties.id", "duplicate lot id '" + lot.id + "'");
      const std::string zone = require_string(props, "zone", path + ".properties");
      const auto z = geometry::parse_zone(zone);
      if (!z)
        throw ValidationError(path + ".properties.zone",
                              "unknown zone '" + zone + "'; valid zones are: " + valid_zones());
      lot.zone = *z;
      const json& geom = require(f, "geometry", path);
      if (require_string(geom, "type", path + ".geometry") != "Polygon")
        throw ValidationError(path + ".geometry.type", "lot geometry must be a Polygon");
      lot.boundary = parse_polygon_coords(require(geom, "coordinates", path + ".geometry"), path + ".geometry.coordinates");
      if (const auto ppm = props.find("ppm"); ppm != props.end()) {
        if (!ppm->is_object()) throw ValidationError(path + ".properties.ppm", "ppm override must be an object");
        out.ppm_overrides[lot.id] = *ppm;
      }
      out.lots.push_back(std::move(lot));
    } else if (role == "building" || role == "driveway") {
      children.push_back({require_string(props, "parent_lot", path + ".properties"), path, f});
    } else {
      throw ValidationError(path + ".properties.role",
                            "unknown role '" + role + "'; valid roles are: lot, building, driveway");
    }
  }

  for (const Pending& c : children) {
    geometry::Lot* lot = nullptr;
    for (geometry::Lot& l : out.lots)
      if (l.id == c.parent) lot = &l;
    const json& props = c.feature["properties"];
    const std::string role = props["role"].get<std::string>();
    if (lot == nullptr)
      throw ValidationError(c.path + ".properties.parent_lot",
                            "orphan " + role + " at " + c.path + ": parent lot '" + c.parent + "' does not exist");
    const json& geom = require(c.feature, "geometry", c.path);
    const std::string type = require_string(geom, "type", c.path + ".geometry");
    const json& coords = require(geom, "coordinates", c.path + ".geometry");
    if (role == "building") {
      if (type != "Polygon") throw ValidationError(c.path + ".geometry.type", "building geometry must be a Polygon");
      geometry::Building b;
      b.footprint = parse_polygon_coords(coords, c.path + ".geometry.coordinates");
      if (const auto h = props.find("height"); h != props.end()) {
        const double height = as_number(*h, c.path + ".properties.height");
        if (!(height > 0.0)) throw ValidationError(c.path + ".properties.height", "building height must be > 0");
        b.height = height;
      }
      if (const auto e = props.find("entrance_edges"); e != props.end()) {
        if (!e->is_array()) throw ValidationError(c.path + ".properties.entrance_edges", "entrance_edges must be an array");
        for (std::size_t k = 0; k < e->size(); ++k) {
          const std::string p = c.path + ".properties.entrance_edges[" + std::to_string(k) + "]";
          const long long idx = as_integer((*e)[k], p);
          if (idx < 0 || idx >= static_cast<long long>(b.footprint.outer.size()))
            throw ValidationError(p, "entrance edge index out of range");
          b.entrance_edges.push_back(static_cast<int>(idx));
        }
      }
      lot->buildings.push_back(std::move(b));
    } else {
      if (type != "LineString") throw ValidationError(c.path + ".geometry.type", "driveway geometry must be a LineString");
      geometry::Polyline line = parse_ring(coords, c.path + ".geometry.coordinates");
      if (line.size() < 2) throw ValidationError(c.path + ".geometry.coordinates", "driveway needs at least 2 points");
      lot->driveways.push_back(std::move(line));
    }
  }

  for (const geometry::Lot& lot : out.lots) geometry::validate(lot);
  return out;
}

json layout_to_json(const LayoutDocument& doc) {
  json features = json::array();
  for (const geometry::Lot& lot : doc.lots) {
    json props = {{"id", lot.id}, {"role", "lot"}, {"zone", geometry::to_string(lot.zone)}};
    if (const auto it = doc.ppm_overrides.find(lot.id); it != doc.ppm_overrides.end()) props["ppm"] = it->second;
    features.push_back({{"type", "Feature"},
                        {"properties", props},
                        {"geometry", {{"type", "Polygon"}, {"coordinates", polygon_coords(lot.boundary)}}}});
  }
  for (const geometry::Lot& lot : doc.lots) {
    for (const geometry::Building& b : lot.buildings) {
      json props = {{"role", "building"}, {"parent_lot", lot.id}};
      if (b.height) props["height"] = *b.height;
      if (!b.entrance_edges.empty()) props["entrance_edges"] = b.entrance_edges;
      features.push_back({{"type", "Feature"},
                          {"properties", props},
                          {"geometry", {{"type", "Polygon"}, {"coordinates", polygon_coords(b.footprint)}}}});
    }
    for (const geometry::Polyline& d : lot.driveways) {
      json coords = json::array();
      for (const geometry::Vec2& p : d) coords.push_back({p.x, p.y});
      features.push_back({{"type", "Feature"},
                          {"properties", {{"role", "driveway"}, {"parent_lot", lot.id}}},
                          {"geometry", {{"type", "LineString"}, {"coordinates", coords}}}});
    }
  }
  return {{"type", "FeatureCollection"},
          {"frame", {{"units", doc.units}, {"origin", {doc.origin.x, doc.origin.y}}}},
          {"features", features}};
}

std::string dump_layout(const LayoutDocument& doc) { return layout_to_json(doc).dump(2) + "\n"; }

}  // namespace urbanveg::io
