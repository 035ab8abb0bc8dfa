#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace urbanveg::fixtures {

using geometry::Building;
using geometry::rectangle;
using geometry::Zone;

Polygon2D polygon(std::vector<Vec2> outer, std::vector<geometry::Ring> holes) {
  return geometry::oriented(Polygon2D{std::move(outer), std::move(holes)});
}

Polygon2D l_shape(double w, double h, double cut_w, double cut_h, Vec2 o) {
  return polygon({o, o + Vec2{w, 0}, o + Vec2{w, h - cut_h}, o + Vec2{w - cut_w, h - cut_h},
                  o + Vec2{w - cut_w, h}, o + Vec2{0, h}});
}

namespace {

Polygon2D regular(Vec2 c, double r, int n, double phase = 0.0) {
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * i / n;
    pts.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return polygon(pts);
}

Polygon2D rotated_rect(Vec2 c, double w, double h, double degrees) {
  const double a = degrees * std::numbers::pi / 180.0;
  std::vector<Vec2> pts;
  for (Vec2 q : {Vec2{-w / 2, -h / 2}, Vec2{w / 2, -h / 2}, Vec2{w / 2, h / 2}, Vec2{-w / 2, h / 2}})
    pts.push_back(c + geometry::rotate(q, a));
  return polygon(pts);
}

Lot lot(std::string id, Polygon2D boundary, Zone zone = Zone::kOther) {
  Lot l;
  l.id = std::move(id);
  l.boundary = std::move(boundary);
  l.zone = zone;
  return l;
}

Building building(Polygon2D footprint, std::vector<int> entrances = {}) {
  return Building{std::move(footprint), std::nullopt, std::move(entrances)};
}

}  // namespace

std::vector<Lot> fixture_lots() {
  std::vector<Lot> lots;
  {
    Lot l = lot("f00", rectangle(0, 0, 40, 30), Zone::kResidential);
    l.buildings.push_back(building(rectangle(15, 10, 25, 20)));
    lots.push_back(l);
  }
  {
    Lot l = lot("f01", rectangle(0, 0, 60, 25), Zone::kResidential);
    l.buildings.push_back(building(rectangle(5, 8, 15, 17)));
    l.buildings.push_back(building(rectangle(40, 5, 52, 15)));
    lots.push_back(l);
  }
  {
    Lot l = lot("f02", l_shape(50, 50, 25, 25), Zone::kCommercial);
    l.buildings.push_back(building(rectangle(2, 2, 12, 12)));
    lots.push_back(l);
  }
  lots.push_back(lot("f03", rectangle(0, 0, 30, 30)));
  lots.push_back(lot("f04", rotated_rect({100, 100}, 40, 20, 30)));
  lots.push_back(lot("f05", polygon({{0, 0}, {60, 0}, {0, 45}}), Zone::kIndustrial));
  {
    Lot l = lot("f06", rectangle(0, 0, 50, 40), Zone::kResidential);
    l.buildings.push_back(building(rectangle(20, 15, 32, 25), {0}));
    lots.push_back(l);
  }
  {
    Lot l = lot("f07", rectangle(0, 0, 70, 30), Zone::kCommercial);
    l.buildings.push_back(building(rectangle(45, 10, 60, 22)));
    l.driveways.push_back({{0, 15}, {45, 15}});
    lots.push_back(l);
  }
  lots.push_back(lot("f08", polygon({{0, 0}, {60, 0}, {45, 30}, {15, 30}})));
  lots.push_back(lot("f09", polygon(rectangle(0, 0, 50, 50).outer, {{{20, 20}, {20, 30}, {30, 30}, {30, 20}}})));
  lots.push_back(lot("f10", polygon({{0, 0}, {50, 0}, {50, 40}, {35, 40}, {35, 15}, {15, 15}, {15, 40}, {0, 40}}),
                     Zone::kIndustrial));
  lots.push_back(lot("f11", rectangle(0, 0, 100, 15), Zone::kStreet));
  lots.push_back(lot("f12", regular({0, 0}, 22, 5, 0.3)));
  {
    Lot l = lot("f13", rectangle(0, 0, 45, 45), Zone::kResidential);
    l.buildings.push_back(building(rectangle(5, 5, 10, 10)));
    l.buildings.push_back(building(rectangle(35, 5, 40, 10)));
    l.buildings.push_back(building(rectangle(5, 35, 10, 40)));
    l.buildings.push_back(building(rectangle(35, 35, 40, 40)));
    lots.push_back(l);
  }
  lots.push_back(lot("f14", regular({-50, 20}, 25, 6)));
  lots.push_back(lot("f15", polygon({{0, 0}, {40, 0}, {40, 10}, {60, 20}, {40, 30}, {40, 40}, {0, 40}, {15, 20}})));
  {
    Lot l = lot("f16", rectangle(0, 0, 35, 60), Zone::kCommercial);
    l.buildings.push_back(building(rectangle(0, 40, 15, 60)));
    lots.push_back(l);
  }
  {
    Lot l = lot("f17", rectangle(0, 0, 80, 40), Zone::kResidential);
    l.buildings.push_back(building(rectangle(10, 20, 25, 32), {1}));
    l.buildings.push_back(building(rectangle(50, 18, 68, 30)));
    l.driveways.push_back({{17, 0}, {17, 20}});
    l.driveways.push_back({{59, 0}, {59, 18}});
    lots.push_back(l);
  }
  lots.push_back(lot("f18", rectangle(0, 0, 60, 8), Zone::kStreet));
  {
    // Envelope covers the whole lot: empty placement region.
    Lot l = lot("f19", rectangle(0, 0, 24, 24));
    l.buildings.push_back(building(rectangle(6, 6, 18, 18)));
    lots.push_back(l);
  }
  return lots;
}

Lot corridor(double length, double width) { return lot("corridor", rectangle(0, 0, length, width), Zone::kStreet); }

std::vector<Lot> ten_lot_layout() {
  std::vector<Lot> lots;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 5; ++col) {
      const double x = col * 45.0;
      const double y = row * 45.0;
      Lot l = lot("b" + std::to_string(row) + std::to_string(col), rectangle(x, y, x + 40, y + 40),
                  geometry::kAllZones[(row * 5 + col) % 5]);
      lots.push_back(l);
    }
  }
  return lots;
}

std::size_t separation_violations(const std::vector<sampling::Sample>& s) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dx = s[i].position.x - s[j].position.x;
      const double dy = s[i].position.y - s[j].position.y;
      const double r = s[i].radius + s[j].radius;
      if (dx * dx + dy * dy < r * r) ++bad;
    }
  return bad;
}

namespace {

double seg_dist(Vec2 q, Vec2 a, Vec2 b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((q.x - a.x) * vx + (q.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(q.x - (a.x + t * vx), q.y - (a.y + t * vy));
}

bool crossings(const geometry::Ring& r, Vec2 q) {
  bool in = false;
  for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
    if ((r[i].y > q.y) != (r[j].y > q.y)) {
      const double x = r[j].x + (q.y - r[j].y) * (r[i].x - r[j].x) / (r[i].y - r[j].y);
      if (q.x < x) in = !in;
    }
  }
  return in;
}

}  // namespace

double brute_distance_to_boundary(const Polygon2D& p, Vec2 q) {
  double best = INFINITY;
  auto scan = [&](const geometry::Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) best = std::min(best, seg_dist(q, r[i], r[(i + 1) % r.size()]));
  };
  scan(p.outer);
  for (const auto& h : p.holes) scan(h);
  return best;
}

bool brute_inside(const Polygon2D& p, Vec2 q) {
  if (!crossings(p.outer, q)) return false;
  for (const auto& h : p.holes)
    if (crossings(h, q)) return false;
  return true;
}

}  // namespace urbanveg::fixtures
