#pragma once

// Conversions between the engine's polygon types and Boost.Geometry models.

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>

#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::geometry::bgx {

namespace bg = boost::geometry;

using Point = bg::model::d2::point_xy<double>;
using Polygon = bg::model::polygon<Point, /*ClockWise=*/false, /*Closed=*/true>;
using MultiPolygon = bg::model::multi_polygon<Polygon>;
using Linestring = bg::model::linestring<Point>;

inline bg::model::ring<Point, false, true> to_bg(const Ring& ring) {
  bg::model::ring<Point, false, true> out;
  out.reserve(ring.size() + 1);
  for (const Vec2& v : ring) out.emplace_back(v.x, v.y);
  if (!ring.empty()) out.emplace_back(ring.front().x, ring.front().y);
  return out;
}

inline Polygon to_bg(const Polygon2D& p) {
  Polygon out;
  out.outer() = to_bg(p.outer);
  for (const Ring& h : p.holes) out.inners().push_back(to_bg(h));
  bg::correct(out);
  return out;
}

inline MultiPolygon to_bg(const Region& r) {
  MultiPolygon out;
  for (const Polygon2D& p : r) out.push_back(to_bg(p));
  return out;
}

template <typename BgRing>
Ring from_bg_ring(const BgRing& ring) {
  Ring out;
  out.reserve(ring.size());
  for (const auto& p : ring) out.push_back({p.x(), p.y()});
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

inline Region from_bg(const MultiPolygon& mp, double min_area = 1e-9) {
  Region out;
  for (const Polygon& p : mp) {
    if (std::abs(bg::area(p)) < min_area) continue;
    Polygon2D q;
    q.outer = from_bg_ring(p.outer());
    for (const auto& h : p.inners())
      if (std::abs(bg::area(h)) >= min_area) q.holes.push_back(from_bg_ring(h));
    out.push_back(oriented(std::move(q)));
  }
  return out;
}

}  // namespace urbanveg::geometry::bgx
