#include "urbanveg/metrics/chamfer.hpp"

#include <algorithm>
#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>
#include <iterator>
#include <limits>

#include "urbanveg/errors.hpp"

namespace urbanveg::metrics {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

using BPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using Entry = std::pair<BPoint, std::size_t>;
using Tree = bgi::rtree<Entry, bgi::quadratic<16>>;

Tree index_of(const std::vector<Vec2>& pts) {
  std::vector<Entry> entries;
  entries.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) entries.emplace_back(BPoint(pts[i].x, pts[i].y), i);
  return Tree(entries.begin(), entries.end());
}

}  // namespace

PointSet2D normalize(const std::vector<Vec2>& points, const geometry::Bbox& frame) {
  const double extent = std::max(frame.width(), frame.height());
  PointSet2D out{{}, true};
  out.points.reserve(points.size());
  for (Vec2 p : points) {
    if (!(extent > 0.0)) {
      out.points.push_back({0.0, 0.0});
      continue;
    }
    out.points.push_back({(p.x - frame.min.x) / extent, (p.y - frame.min.y) / extent});
  }
  return out;
}

std::vector<double> nearest_sq(const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
  std::vector<double> out(from.size(), std::numeric_limits<double>::infinity());
  if (to.empty()) return out;
  const Tree tree = index_of(to);
  std::vector<Entry> hit;
  for (std::size_t i = 0; i < from.size(); ++i) {
    hit.clear();
    tree.query(bgi::nearest(BPoint(from[i].x, from[i].y), 1), std::back_inserter(hit));
    out[i] = geometry::distance_sq(from[i], to[hit.front().second]);
  }
  return out;
}

double chamfer(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) throw NoSampleError("Chamfer distance is undefined for an empty point set");
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  return mean(nearest_sq(a, b)) + mean(nearest_sq(b, a));
}

double chamfer(const PointSet2D& a, const PointSet2D& b) { return chamfer(a.points, b.points); }

SpacingStats spacing_stats(const std::vector<Vec2>& points) {
  SpacingStats s;
  s.count = points.size();
  if (points.size() < 2) return s;
  const Tree tree = index_of(points);
  s.min = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::vector<Entry> hit;
  for (std::size_t i = 0; i < points.size(); ++i) {
    hit.clear();
    tree.query(bgi::nearest(BPoint(points[i].x, points[i].y), 2) &&
                   bgi::satisfies([i](const Entry& e) { return e.second != i; }),
               std::back_inserter(hit));
    double best = std::numeric_limits<double>::infinity();
    for (const Entry& e : hit) best = std::min(best, geometry::distance(points[i], points[e.second]));
    s.min = std::min(s.min, best);
    s.max = std::max(s.max, best);
    sum += best;
  }
  s.mean = sum / static_cast<double>(points.size());
  return s;
}

}  // namespace urbanveg::metrics
