#include "urbanveg/geometry/polygon.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "urbanveg/errors.hpp"

namespace urbanveg::geometry {

namespace {

constexpr double kOnBoundaryTol = 1e-9;

// Orientation of (a, b, c): > 0 counter-clockwise.
double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = orient(c, d, a);
  const double d2 = orient(c, d, b);
  const double d3 = orient(a, b, c);
  const double d4 = orient(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

// 1 inside, 0 on boundary, -1 outside.
int classify(const Ring& ring, Vec2 q) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = ring[j];
    const Vec2 b = ring[i];
    if (distance_to_segment(q, a, b) <= kOnBoundaryTol) return 0;
    if ((b.y > q.y) != (a.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

Ring cleaned(Ring ring) {
  Ring out;
  out.reserve(ring.size());
  for (const Vec2& p : ring)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

void validate_ring(const Ring& ring, const std::string& label) {
  const Ring r = cleaned(ring);
  if (r.size() < 3) throw ValidationError(label, label + ": ring needs at least 3 distinct vertices");
  if (std::abs(signed_area(r)) <= 0.0) throw ValidationError(label, label + ": ring has zero area");
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = r[i];
    const Vec2 b = r[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // Adjacent edges share a vertex; skip them.
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Vec2 c = r[j];
      const Vec2 d = r[(j + 1) % n];
      if (segments_intersect(a, b, c, d)) {
        throw ValidationError(label, label + ": ring is self-intersecting (edges " + std::to_string(i) +
                                         " and " + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

Vec2 rotate(Vec2 p, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double signed_area(const Ring& ring) {
  double twice = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) twice += cross(ring[j], ring[i]);
  return twice / 2.0;
}

double area(const Polygon2D& p) {
  double a = std::abs(signed_area(p.outer));
  for (const Ring& h : p.holes) a -= std::abs(signed_area(h));
  return a;
}

double area(const Region& r) {
  double a = 0.0;
  for (const Polygon2D& p : r) a += area(p);
  return a;
}

Bbox bbox(const Ring& ring) {
  Bbox b{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
         {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
  for (const Vec2& p : ring) {
    b.min.x = std::min(b.min.x, p.x);
    b.min.y = std::min(b.min.y, p.y);
    b.max.x = std::max(b.max.x, p.x);
    b.max.y = std::max(b.max.y, p.y);
  }
  return b;
}

Bbox bbox(const Polygon2D& p) { return bbox(p.outer); }

Bbox bbox(const Region& r) {
  Bbox b = bbox(Ring{});
  for (const Polygon2D& p : r) {
    const Bbox pb = bbox(p);
    b.min.x = std::min(b.min.x, pb.min.x);
    b.min.y = std::min(b.min.y, pb.min.y);
    b.max.x = std::max(b.max.x, pb.max.x);
    b.max.y = std::max(b.max.y, pb.max.y);
  }
  return b;
}

Vec2 centroid(const Polygon2D& p) {
  auto accumulate = [](const Ring& ring, double& a, Vec2& m) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const double c = cross(ring[j], ring[i]);
      a += c;
      m.x += (ring[j].x + ring[i].x) * c;
      m.y += (ring[j].y + ring[i].y) * c;
    }
  };
  double a = 0.0;
  Vec2 m{};
  Ring outer = p.outer;
  if (signed_area(outer) < 0) std::reverse(outer.begin(), outer.end());
  accumulate(outer, a, m);
  for (Ring h : p.holes) {
    if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
    accumulate(h, a, m);
  }
  if (a == 0.0) {
    Vec2 s{};
    for (const Vec2& q : p.outer) s = s + q;
    return p.outer.empty() ? s : s * (1.0 / static_cast<double>(p.outer.size()));
  }
  return {m.x / (3.0 * a), m.y / (3.0 * a)};
}

bool contains(const Polygon2D& p, Vec2 q) {
  if (p.outer.size() < 3) return false;
  if (classify(p.outer, q) < 0) return false;
  for (const Ring& h : p.holes)
    if (h.size() >= 3 && classify(h, q) > 0) return false;
  return true;
}

bool contains(const Region& r, Vec2 q) {
  return std::any_of(r.begin(), r.end(), [&](const Polygon2D& p) { return contains(p, q); });
}

double distance_to_segment(Vec2 q, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(q, a);
  const double t = std::clamp(dot(q - a, ab) / len2, 0.0, 1.0);
  return distance(q, a + ab * t);
}

namespace {
double ring_distance(const Ring& ring, Vec2 q) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) best = std::min(best, distance_to_segment(q, ring[j], ring[i]));
  return best;
}
}  // namespace

double distance_to_boundary(const Polygon2D& p, Vec2 q) {
  double best = ring_distance(p.outer, q);
  for (const Ring& h : p.holes) best = std::min(best, ring_distance(h, q));
  return best;
}

double distance_to_boundary(const Region& r, Vec2 q) {
  double best = std::numeric_limits<double>::infinity();
  for (const Polygon2D& p : r) best = std::min(best, distance_to_boundary(p, q));
  return best;
}

void validate(const Polygon2D& p, std::string_view label) {
  const std::string base(label);
  validate_ring(p.outer, base + " outer");
  for (std::size_t i = 0; i < p.holes.size(); ++i) {
    const std::string hl = base + " hole[" + std::to_string(i) + "]";
    validate_ring(p.holes[i], hl);
    Polygon2D outer_only{p.outer, {}};
    for (const Vec2& v : p.holes[i])
      if (!contains(outer_only, v)) throw ValidationError(hl, hl + ": hole is not inside the outer ring");
  }
}

Polygon2D oriented(Polygon2D p) {
  p.outer = cleaned(std::move(p.outer));
  if (signed_area(p.outer) < 0) std::reverse(p.outer.begin(), p.outer.end());
  for (Ring& h : p.holes) {
    h = cleaned(std::move(h));
    if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
  }
  return p;
}

Polygon2D rectangle(double x0, double y0, double x1, double y1) {
  return Polygon2D{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, {}};
}

std::string_view to_string(Zone z) {
  switch (z) {
    case Zone::kResidential: return "residential";
    case Zone::kCommercial: return "commercial";
    case Zone::kIndustrial: return "industrial";
    case Zone::kStreet: return "street";
    case Zone::kOther: return "other";
  }
  return "other";
}

std::optional<Zone> parse_zone(std::string_view s) {
  for (Zone z : kAllZones)
    if (to_string(z) == s) return z;
  return std::nullopt;
}

void validate(const Lot& lot) {
  const std::string base = "lot '" + lot.id + "'";
  validate(lot.boundary, base + " boundary");
  for (std::size_t i = 0; i < lot.buildings.size(); ++i) {
    const std::string bl = base + " building[" + std::to_string(i) + "]";
    const Polygon2D& fp = lot.buildings[i].footprint;
    validate(fp, bl);
    const bool touches =
        std::any_of(fp.outer.begin(), fp.outer.end(), [&](Vec2 v) { return contains(lot.boundary, v); }) ||
        std::any_of(lot.boundary.outer.begin(), lot.boundary.outer.end(),
                    [&](Vec2 v) { return contains(fp, v); });
    if (!touches) throw ValidationError(bl, bl + ": building does not intersect the lot boundary");
  }
}

}  // namespace urbanveg::geometry
