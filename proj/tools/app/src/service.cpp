#include "urbanveg/app/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>

#include "urbanveg/app/pipeline.hpp"
#include "urbanveg/coverage/polygonize.hpp"
#include "urbanveg/errors.hpp"

namespace urbanveg::app {

using io::json;

namespace {

Response error_response(int status, std::string_view code, const std::string& field, const std::string& message) {
  json err = {{"code", code}, {"message", message}};
  err["field"] = field.empty() ? json(nullptr) : json(field);
  return {status, {{"error", err}}};
}

template <typename F>
Response guarded(F&& f) {
  try {
    return f();
  } catch (const ParameterRangeError& e) {
    return error_response(422, to_string(e.code()), e.field(), e.what());
  } catch (const Error& e) {
    return error_response(400, to_string(e.code()), e.field(), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "validation_error", "", std::string("malformed request: ") + e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal_error", "", e.what());
  }
}

json parse_body(const std::string& body) {
  json j = io::parse_json(body, "request body");
  if (!j.is_object()) throw ValidationError("", "request body must be a JSON object");
  return j;
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ValidationError(key, "unknown field '" + key + "'");
}

std::uint64_t seed_of(const json& j) {
  const auto it = j.find("seed");
  if (it == j.end()) return 0;
  if (!it->is_number_integer() || (it->is_number_integer() && !it->is_number_unsigned() && it->get<long long>() < 0))
    throw ValidationError("seed", "seed must be a non-negative integer");
  return it->get<std::uint64_t>();
}

geometry::Polygon2D polygon_of(const json& v, const std::string& path) {
  if (v.is_array()) return {io::parse_ring(v, path), {}};
  geometry::Polygon2D p;
  p.outer = io::parse_ring(io::require(v, "outer", path), path + ".outer");
  if (const auto h = v.find("holes"); h != v.end()) {
    if (!h->is_array()) throw ValidationError(path + ".holes", "holes must be an array of rings");
    for (std::size_t i = 0; i < h->size(); ++i)
      p.holes.push_back(io::parse_ring((*h)[i], path + ".holes[" + std::to_string(i) + "]"));
  }
  return p;
}

geometry::Lot lot_of(const json& v, std::size_t index) {
  const std::string path = "polygons[" + std::to_string(index) + "]";
  geometry::Lot lot;
  lot.id = "shape-" + std::to_string(index);
  lot.boundary = polygon_of(v, path);
  if (v.is_object()) {
    if (v.contains("id")) lot.id = io::require_string(v, "id", path);
    if (v.contains("zone")) {
      const std::string z = io::require_string(v, "zone", path);
      const auto zone = geometry::parse_zone(z);
      if (!zone)
        throw ValidationError(path + ".zone",
                              "unknown zone '" + z + "'; valid zones are: residential, commercial, industrial, street, other");
      lot.zone = *zone;
    }
    if (const auto b = v.find("buildings"); b != v.end()) {
      if (!b->is_array()) throw ValidationError(path + ".buildings", "buildings must be an array");
      for (std::size_t i = 0; i < b->size(); ++i) {
        const std::string bp = path + ".buildings[" + std::to_string(i) + "]";
        geometry::Building bld{polygon_of((*b)[i], bp), std::nullopt, {}};
        if ((*b)[i].is_object() && (*b)[i].contains("height")) bld.height = io::require_number((*b)[i], "height", bp);
        if ((*b)[i].is_object() && (*b)[i].contains("entrance_edges")) {
          const json& edges = (*b)[i]["entrance_edges"];
          if (!edges.is_array()) throw ValidationError(bp + ".entrance_edges", "entrance_edges must be an array");
          for (std::size_t k = 0; k < edges.size(); ++k)
            bld.entrance_edges.push_back(
                static_cast<int>(io::as_integer(edges[k], bp + ".entrance_edges[" + std::to_string(k) + "]")));
        }
        lot.buildings.push_back(std::move(bld));
      }
    }
    if (const auto d = v.find("driveways"); d != v.end()) {
      if (!d->is_array()) throw ValidationError(path + ".driveways", "driveways must be an array");
      for (std::size_t i = 0; i < d->size(); ++i)
        lot.driveways.push_back(io::parse_ring((*d)[i], path + ".driveways[" + std::to_string(i) + "]"));
    }
  }
  return lot;
}

std::string base64_decode(std::string s, const std::string& field) {
  using namespace boost::archive::iterators;
  using It = transform_width<binary_from_base64<std::string::const_iterator>, 8, 6>;
  std::erase_if(s, [](char c) { return c == '\n' || c == '\r' || c == ' '; });
  std::size_t pad = 0;
  while (!s.empty() && s.back() == '=') {
    s.pop_back();
    ++pad;
  }
  try {
    std::string out(It(s.cbegin()), It(s.cend()));
    return out;
  } catch (const std::exception&) {
    throw ValidationError(field, field + " is not valid base64");
  }
}

}  // namespace

Response handle_place(const std::string& body) {
  return guarded([&] {
    const json j = parse_body(body);
    reject_unknown(j, {"polygons", "strategy", "positional", "structural", "seed", "envelope"});
    json model_json = {{"strategy", io::require(j, "strategy", "")}};
    if (j.contains("positional")) model_json["positional"] = j["positional"];
    if (j.contains("structural")) model_json["structural"] = j["structural"];
    const ppm::PPM model = io::parse_ppm(model_json, ppm::PPM{}, "");
    const std::uint64_t seed = seed_of(j);

    io::EngineConfig config;
    if (j.contains("envelope")) config = io::config_from_json({{"envelope", j["envelope"]}});

    const json& polygons = io::require(j, "polygons", "");
    if (!polygons.is_array() || polygons.empty())
      throw ValidationError("polygons", "polygons must be a non-empty array");
    io::SeedsByLot seeds;
    for (std::size_t i = 0; i < polygons.size(); ++i) {
      const geometry::Lot lot = lot_of(polygons[i], i);
      if (seeds.count(lot.id)) throw ValidationError("polygons[" + std::to_string(i) + "].id", "duplicate id '" + lot.id + "'");
      seeds[lot.id] = place_lot(lot, model, config.species, config.envelope, seed);
    }
    const io::PlacementExport e = io::make_export(seeds, seed);
    json samples = json::array();
    for (const io::PlacementRecord& r : e.records) samples.push_back(io::record_to_json(r));
    return Response{200, {{"engine_version", e.engine_version}, {"seed", seed}, {"samples", samples}}};
  });
}

Response handle_grow(const std::string& body) {
  return guarded([&] {
    const json j = parse_body(body);
    reject_unknown(j, {"seeds", "obstacles", "years", "attractor_density", "seed"});
    const json& seeds_json = io::require(j, "seeds", "");
    if (!seeds_json.is_array()) throw ValidationError("seeds", "seeds must be an array");
    std::vector<ppm::PlantSeed> seeds;
    for (std::size_t i = 0; i < seeds_json.size(); ++i) {
      const std::string p = "seeds[" + std::to_string(i) + "]";
      const json& s = seeds_json[i];
      ppm::PlantSeed seed;
      seed.position = {io::require_number(s, "x", p), io::require_number(s, "y", p)};
      seed.species = static_cast<int>(io::as_integer(io::require(s, "species", p), p + ".species"));
      seed.age = io::require_number(s, "age", p);
      if (!(seed.age >= 0.0 && seed.age <= 100.0)) throw ParameterRangeError(p + ".age", seed.age, 0.0, 100.0);
      seed.prune_factor = s.contains("prune_factor") ? io::require_number(s, "prune_factor", p) : 1.0;
      if (!(seed.prune_factor >= 0.0 && seed.prune_factor <= 1.0))
        throw ParameterRangeError(p + ".prune_factor", seed.prune_factor, 0.0, 1.0);
      seed.radius = s.contains("radius") ? io::require_number(s, "radius", p) : 0.0;
      seeds.push_back(seed);
    }
    std::vector<geometry::Polygon2D> footprints;
    std::vector<std::optional<double>> heights;
    if (const auto o = j.find("obstacles"); o != j.end()) {
      if (!o->is_array()) throw ValidationError("obstacles", "obstacles must be an array");
      for (std::size_t i = 0; i < o->size(); ++i) {
        const std::string p = "obstacles[" + std::to_string(i) + "]";
        const json& ob = (*o)[i];
        footprints.push_back(polygon_of(ob.is_object() ? io::require(ob, "footprint", p) : ob, p + ".footprint"));
        geometry::validate(footprints.back(), p);
        heights.push_back(ob.is_object() && ob.contains("height") ? std::optional(io::require_number(ob, "height", p))
                                                                   : std::nullopt);
      }
    }
    growth::GrowthOptions options;
    if (j.contains("years")) {
      const long long years = io::as_integer(j["years"], "years");
      if (years < 0 || years > 100) throw ParameterRangeError("years", static_cast<double>(years), 0, 100);
      options.years = static_cast<int>(years);
    }
    if (j.contains("attractor_density")) {
      options.attractor_density = io::as_number(j["attractor_density"], "attractor_density");
      if (!(options.attractor_density > 0.0 && options.attractor_density <= 5.0))
        throw ParameterRangeError("attractor_density", options.attractor_density, 0.0, 5.0);
    }
    geometry::Lot lot = open_lot("request", seeds, footprints);
    for (std::size_t i = 0; i < heights.size(); ++i) lot.buildings[i].height = heights[i];
    const growth::SpeciesMap species = growth::species_map(growth::default_species_library());
    Rng rng(derive_seed(seed_of(j), "grow:" + lot.id));
    growth::GrowthResult r = growth::grow_lot(lot, seeds, species, rng, options);
    std::vector<io::LotSkeleton> trees;
    for (growth::TreeSkeleton& t : r.trees) trees.push_back({lot.id, std::move(t)});
    json out = io::skeletons_to_json(trees);
    return Response{200, {{"engine_version", out["engine_version"]}, {"skeletons", out["trees"]}}};
  });
}

Response handle_strategies() {
  return guarded([] { return Response{200, io::strategies_schema()}; });
}

Response handle_polygonize(const std::string& body) {
  return guarded([&] {
    const json j = parse_body(body);
    reject_unknown(j, {"raster", "image_base64", "worldfile", "georef", "lot", "threshold"});
    coverage::CoverageMap map;
    if (const auto r = j.find("raster"); r != j.end()) {
      map.width = static_cast<int>(io::as_integer(io::require(*r, "width", "raster"), "raster.width"));
      map.height = static_cast<int>(io::as_integer(io::require(*r, "height", "raster"), "raster.height"));
      const json& values = io::require(*r, "values", "raster");
      if (map.width <= 0 || map.height <= 0) throw ValidationError("raster", "raster dimensions must be positive");
      if (!values.is_array() || values.size() != static_cast<std::size_t>(map.width) * map.height)
        throw ValidationError("raster.values", "raster.values must hold width * height numbers");
      for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = io::as_number(values[i], "raster.values[" + std::to_string(i) + "]");
        if (!(v >= 0.0 && v <= 1.0))
          throw ValidationError("raster.values[" + std::to_string(i) + "]", "raster values must lie in [0, 1]");
        map.values.push_back(v);
      }
    } else if (j.contains("image_base64")) {
      const coverage::Raster img =
          coverage::decode_image(base64_decode(io::require_string(j, "image_base64", ""), "image_base64"));
      map.width = img.width;
      map.height = img.height;
      map.values = img.values;
    } else {
      throw ValidationError("raster", "one of 'raster' or 'image_base64' is required");
    }
    if (j.contains("worldfile")) {
      map.georef = coverage::parse_worldfile(io::require_string(j, "worldfile", ""));
    } else {
      const json& g = io::require(j, "georef", "");
      if (!g.is_array() || g.size() != 6) throw ValidationError("georef", "georef must hold 6 numbers a, d, b, e, c, f");
      double v[6];
      for (std::size_t i = 0; i < 6; ++i) v[i] = io::as_number(g[i], "georef[" + std::to_string(i) + "]");
      map.georef = {v[0], v[1], v[2], v[3], v[4], v[5]};
      if (map.georef.determinant() == 0.0) throw ValidationError("georef", "georef transform is singular");
    }
    const double threshold = j.contains("threshold") ? io::as_number(j["threshold"], "threshold") : 0.5;
    if (!(threshold >= 0.0 && threshold <= 1.0)) throw ParameterRangeError("threshold", threshold, 0.0, 1.0);
    geometry::Lot lot;
    lot.id = "request";
    lot.boundary = polygon_of(io::require(j, "lot", ""), "lot");
    geometry::validate(lot);
    json polygons = json::array();
    for (const geometry::Polygon2D& p : coverage::polygonize(map, lot, threshold)) {
      json holes = json::array();
      for (const geometry::Ring& h : p.holes) holes.push_back(io::ring_to_json(h));
      polygons.push_back({{"outer", io::ring_to_json(p.outer)}, {"holes", holes}, {"area", geometry::area(p)}});
    }
    return Response{200, {{"threshold", threshold}, {"polygons", polygons}}};
  });
}

Response dispatch(const std::string& method, const std::string& path, const std::string& body) {
  struct Route {
    const char* path;
    const char* method;
  };
  static constexpr Route kRoutes[] = {
      {"/place", "POST"}, {"/grow", "POST"}, {"/strategies", "GET"}, {"/coverage/polygonize", "POST"}};
  for (const Route& r : kRoutes) {
    if (path != r.path) continue;
    if (method != r.method)
      return error_response(405, "method_not_allowed", "", "use " + std::string(r.method) + " " + path);
    if (path == "/place") return handle_place(body);
    if (path == "/grow") return handle_grow(body);
    if (path == "/strategies") return handle_strategies();
    return handle_polygonize(body);
  }
  return error_response(404, "not_found", "", "no endpoint " + path);
}

struct Service::Impl {
  httplib::Server server;
};

Service::Service() : impl_(std::make_unique<Impl>()) {
  auto handler = [](const httplib::Request& req, httplib::Response& res) {
    const Response r = dispatch(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto& s = impl_->server;
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Headers", "Content-Type"},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Put(".*", handler);
  s.Delete(".*", handler);
  s.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Service::~Service() { stop(); }

int Service::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::listen() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace urbanveg::app
