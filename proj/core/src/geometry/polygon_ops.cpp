#include "urbanveg/geometry/polygon_ops.hpp"

#include <numbers>

#include "geometry/bg_adapt.hpp"
#include "urbanveg/errors.hpp"

namespace urbanveg::geometry {

namespace {

namespace bg = boost::geometry;

constexpr int kRoundJoinPoints = 32;
constexpr double kMiterLimit = 2.0;
constexpr int kMaxRejectionTries = 1'000'000;

bgx::MultiPolygon buffer_polygon(const bgx::MultiPolygon& in, double distance, bool round_joins) {
  bgx::MultiPolygon out;
  bg::strategy::buffer::distance_symmetric<double> dist(distance);
  bg::strategy::buffer::side_straight side;
  bg::strategy::buffer::end_flat end;
  bg::strategy::buffer::point_circle point(kRoundJoinPoints);
  if (round_joins) {
    bg::strategy::buffer::join_round join(kRoundJoinPoints);
    bg::buffer(in, out, dist, side, join, end, point);
  } else {
    bg::strategy::buffer::join_miter join(kMiterLimit);
    bg::buffer(in, out, dist, side, join, end, point);
  }
  return out;
}

bgx::MultiPolygon buffer_line(const Polyline& line, double distance) {
  bgx::Linestring ls;
  for (const Vec2& v : line) ls.emplace_back(v.x, v.y);
  bgx::MultiPolygon out;
  bg::strategy::buffer::distance_symmetric<double> dist(distance);
  bg::strategy::buffer::side_straight side;
  bg::strategy::buffer::join_round join(kRoundJoinPoints);
  bg::strategy::buffer::end_round end(kRoundJoinPoints);
  bg::strategy::buffer::point_circle point(kRoundJoinPoints);
  bg::buffer(ls, out, dist, side, join, end, point);
  return out;
}

}  // namespace

Region unite(const Region& a, const Region& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  bgx::MultiPolygon out;
  bg::union_(bgx::to_bg(a), bgx::to_bg(b), out);
  return bgx::from_bg(out);
}

Region unite_all(const std::vector<Region>& parts) {
  Region acc;
  for (const Region& p : parts) acc = unite(acc, p);
  return acc;
}

Region intersect(const Region& a, const Region& b) {
  if (a.empty() || b.empty()) return {};
  bgx::MultiPolygon out;
  bg::intersection(bgx::to_bg(a), bgx::to_bg(b), out);
  return bgx::from_bg(out);
}

Region subtract(const Region& a, const Region& b) {
  if (a.empty()) return {};
  if (b.empty()) return a;
  bgx::MultiPolygon out;
  bg::difference(bgx::to_bg(a), bgx::to_bg(b), out);
  return bgx::from_bg(out);
}

Region plantable_region(const Lot& lot) {
  validate(lot);
  Region boundary{oriented(lot.boundary)};
  std::vector<Region> footprints;
  footprints.reserve(lot.buildings.size());
  for (const Building& b : lot.buildings) footprints.push_back(Region{oriented(b.footprint)});
  return subtract(boundary, unite_all(footprints));
}

Region inset(const Region& r, double distance) {
  if (distance <= 0.0) return r;
  return bgx::from_bg(buffer_polygon(bgx::to_bg(r), -distance, /*round_joins=*/true));
}

Region boundary_band(const Region& r, double beta) {
  if (!(beta >= 0.0)) throw ParameterRangeError("beta", "beta must be >= 0");
  if (beta == 0.0 || r.empty()) return {};
  return subtract(r, inset(r, beta));
}

Region boundary_band(const Polygon2D& p, double beta) { return boundary_band(Region{oriented(p)}, beta); }

Region building_envelope(const Lot& lot, EnvelopeOffsets offsets) {
  if (!(offsets.wall >= 0.0)) throw ParameterRangeError("wall_offset", "wall_offset must be >= 0");
  if (!(offsets.driveway >= 0.0)) throw ParameterRangeError("driveway_offset", "driveway_offset must be >= 0");

  std::vector<Region> parts;
  for (const Building& b : lot.buildings) {
    const Polygon2D fp = oriented(b.footprint);
    if (offsets.wall > 0.0) {
      parts.push_back(bgx::from_bg(buffer_polygon(bgx::to_bg(Region{fp}), offsets.wall, false)));
    } else {
      parts.push_back(Region{fp});
    }
    const auto n = static_cast<int>(fp.outer.size());
    for (int e : b.entrance_edges) {
      if (e < 0 || e >= n || offsets.wall <= 0.0) continue;
      // Footprint is counter-clockwise, so the outward normal is to the right.
      const Vec2 a = fp.outer[static_cast<std::size_t>(e)];
      const Vec2 c = fp.outer[static_cast<std::size_t>((e + 1) % n)];
      const Vec2 d = c - a;
      const double len = norm(d);
      if (len == 0.0) continue;
      const Vec2 out = Vec2{d.y, -d.x} * (2.0 * offsets.wall / len);
      parts.push_back(Region{oriented(Polygon2D{{a, c, c + out, a + out}, {}})});
    }
  }
  for (const Polyline& line : lot.driveways) {
    if (line.size() < 2) continue;
    if (offsets.driveway > 0.0) parts.push_back(bgx::from_bg(buffer_line(line, offsets.driveway)));
  }
  return unite_all(parts);
}

Vec2 random_point_in(const Region& r, Rng& rng) {
  if (r.empty() || area(r) <= 0.0) throw NoSampleError("cannot sample a point in an empty region");
  const Bbox b = bbox(r);
  for (int i = 0; i < kMaxRejectionTries; ++i) {
    const Vec2 q{rng.uniform(b.min.x, b.max.x), rng.uniform(b.min.y, b.max.y)};
    if (contains(r, q)) return q;
  }
  throw NoSampleError("rejection sampling failed: region too thin relative to its bounding box");
}

Vec2 random_point_in(const Polygon2D& p, Rng& rng) { return random_point_in(Region{p}, rng); }

Polygon2D circle_polygon(Vec2 center, double radius, int segments) {
  Polygon2D p;
  p.outer.reserve(static_cast<std::size_t>(segments));
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * std::numbers::pi * i / segments;
    p.outer.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return p;
}

}  // namespace urbanveg::geometry
