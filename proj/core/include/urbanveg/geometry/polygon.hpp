#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace urbanveg::geometry {

/// 2D point or vector in meters (local metric frame).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline double distance_sq(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Rotates `p` counter-clockwise by `radians` about the origin.
Vec2 rotate(Vec2 p, double radians);

/// Open ring: the closing vertex is implicit.
using Ring = std::vector<Vec2>;

/// Polygon with optional holes. Outer ring counter-clockwise, holes clockwise.
struct Polygon2D {
  Ring outer;
  std::vector<Ring> holes;
};

/// Possibly multi-part area. An empty vector is the empty region.
using Region = std::vector<Polygon2D>;

struct Bbox {
  Vec2 min{0.0, 0.0};
  Vec2 max{0.0, 0.0};

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  Vec2 center() const { return {(min.x + max.x) / 2, (min.y + max.y) / 2}; }
  bool empty() const { return !(max.x >= min.x && max.y >= min.y); }
};

double signed_area(const Ring& ring);
double area(const Polygon2D& p);
double area(const Region& r);

Bbox bbox(const Ring& ring);
Bbox bbox(const Polygon2D& p);
/// Bounding box of all parts; `empty()` for an empty region.
Bbox bbox(const Region& r);

/// Area centroid of the outer ring minus holes.
Vec2 centroid(const Polygon2D& p);

/// True iff q lies inside the outer ring and outside every hole.
/// Points on any ring (within 1e-9 m) count as inside.
bool contains(const Polygon2D& p, Vec2 q);
bool contains(const Region& r, Vec2 q);

double distance_to_segment(Vec2 q, Vec2 a, Vec2 b);
/// Distance from q to the nearest point on any ring of p.
double distance_to_boundary(const Polygon2D& p, Vec2 q);
double distance_to_boundary(const Region& r, Vec2 q);

/// Checks ring size, non-zero area, simplicity and hole containment.
/// Throws ValidationError whose field names the offending ring, prefixed by
/// `label` (e.g. "lot 'a' building[2] hole[0]").
void validate(const Polygon2D& p, std::string_view label);

/// Copy with the outer ring counter-clockwise and holes clockwise, and
/// consecutive duplicate / closing vertices removed.
Polygon2D oriented(Polygon2D p);

/// Axis-aligned rectangle helper used by fixtures and tests.
Polygon2D rectangle(double x0, double y0, double x1, double y1);

// ---------------------------------------------------------------------------
// Lots

enum class Zone { kResidential, kCommercial, kIndustrial, kStreet, kOther };

inline constexpr std::array<Zone, 5> kAllZones = {Zone::kResidential, Zone::kCommercial,
                                                  Zone::kIndustrial, Zone::kStreet,
                                                  Zone::kOther};

std::string_view to_string(Zone z);
std::optional<Zone> parse_zone(std::string_view s);

struct Building {
  Polygon2D footprint;
  /// Extrusion height for growth obstacles; nullopt uses the arena default.
  std::optional<double> height;
  /// Indices of outer-ring edges (edge i runs from vertex i to i+1) tagged as
  /// entrances; the envelope offset is doubled in front of them.
  std::vector<int> entrance_edges;
};

using Polyline = std::vector<Vec2>;

struct Lot {
  std::string id;
  Polygon2D boundary;
  std::vector<Building> buildings;
  Zone zone = Zone::kOther;
  std::vector<Polyline> driveways;
};

/// Validates the boundary and every building footprint.
void validate(const Lot& lot);

}  // namespace urbanveg::geometry
