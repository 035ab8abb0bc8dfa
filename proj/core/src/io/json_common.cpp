#include "urbanveg/io/json_common.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "urbanveg/errors.hpp"

namespace urbanveg::io {

namespace {

std::string join(std::string_view path, std::string_view key) {
  if (path.empty()) return std::string(key);
  return std::string(path) + "." + std::string(key);
}

std::string index(std::string_view path, std::size_t i) { return std::string(path) + "[" + std::to_string(i) + "]"; }

}  // namespace

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " byte " + std::to_string(e.byte),
                     std::string(what) + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

const json& require(const json& obj, std::string_view key, std::string_view path) {
  if (!obj.is_object()) throw ValidationError(std::string(path), std::string(path.empty() ? "document" : path) + " must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(join(path, key), "missing field '" + join(path, key) + "'");
  return *it;
}

double as_number(const json& v, std::string_view path) {
  if (!v.is_number()) throw ValidationError(std::string(path), std::string(path) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ValidationError(std::string(path), std::string(path) + " must be finite");
  return d;
}

long long as_integer(const json& v, std::string_view path) {
  const double d = as_number(v, path);
  if (d != std::floor(d)) throw ValidationError(std::string(path), std::string(path) + " must be an integer");
  return static_cast<long long>(d);
}

double require_number(const json& obj, std::string_view key, std::string_view path) {
  return as_number(require(obj, key, path), join(path, key));
}

std::string require_string(const json& obj, std::string_view key, std::string_view path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw ValidationError(join(path, key), join(path, key) + " must be a string");
  return v.get<std::string>();
}

geometry::Vec2 parse_point(const json& v, std::string_view path) {
  if (!v.is_array() || v.size() < 2)
    throw ValidationError(std::string(path), std::string(path) + " must be an [x, y] array");
  return {as_number(v[0], index(path, 0)), as_number(v[1], index(path, 1))};
}

geometry::Ring parse_ring(const json& v, std::string_view path) {
  if (!v.is_array()) throw ValidationError(std::string(path), std::string(path) + " must be an array of points");
  geometry::Ring r;
  for (std::size_t i = 0; i < v.size(); ++i) r.push_back(parse_point(v[i], index(path, i)));
  if (r.size() > 1 && r.front() == r.back()) r.pop_back();
  return r;
}

geometry::Polygon2D parse_polygon_coords(const json& v, std::string_view path) {
  if (!v.is_array() || v.empty())
    throw ValidationError(std::string(path), std::string(path) + " must be a non-empty array of rings");
  geometry::Polygon2D p;
  p.outer = parse_ring(v[0], index(path, 0));
  for (std::size_t i = 1; i < v.size(); ++i) p.holes.push_back(parse_ring(v[i], index(path, i)));
  return p;
}

json ring_to_json(const geometry::Ring& r) {
  json out = json::array();
  for (const geometry::Vec2& p : r) out.push_back({p.x, p.y});
  if (!r.empty()) out.push_back({r.front().x, r.front().y});
  return out;
}

json polygon_coords(const geometry::Polygon2D& p) {
  json out = json::array();
  out.push_back(ring_to_json(p.outer));
  for (const geometry::Ring& h : p.holes) out.push_back(ring_to_json(h));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError(path, "error reading '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError(path, "error writing '" + path + "'");
}

}  // namespace urbanveg::io
