#include "urbanveg/coverage/polygonize.hpp"

#include <algorithm>
#include <unordered_map>

#include "urbanveg/errors.hpp"
#include "urbanveg/geometry/polygon_ops.hpp"

namespace urbanveg::coverage {

using geometry::Polygon2D;
using geometry::Region;
using geometry::Ring;
using geometry::Vec2;

namespace {

class Marcher {
 public:
  Marcher(const CoverageMap& m, double thr) : m_(m), thr_(thr), stride_(static_cast<long long>(m.width) + 2) {}

  bool inside(long long x, long long y) const { return in_raster(x, y) && m_.at(int(x), int(y)) >= thr_; }

  // Edge keys: grid points are offset by one so the padding row/column is 0.
  long long h_key(long long x, long long y) const { return 2 * ((y + 1) * stride_ + (x + 1)); }
  long long v_key(long long x, long long y) const { return h_key(x, y) + 1; }

  Vec2 crossing(long long key) const {
    const bool vertical = key & 1;
    const long long cell = key / 2;
    const long long x = cell % stride_ - 1;
    const long long y = cell / stride_ - 1;
    const long long qx = vertical ? x : x + 1;
    const long long qy = vertical ? y + 1 : y;
    double t = 0.5;
    if (in_raster(x, y) && in_raster(qx, qy)) {
      const double vp = m_.at(int(x), int(y));
      const double vq = m_.at(int(qx), int(qy));
      t = vp == vq ? 0.5 : (vp - thr_) / (vp - vq);
    }
    t = std::clamp(t, 0.0, 1.0);
    return {static_cast<double>(x) + t * static_cast<double>(qx - x), static_cast<double>(y) + t * static_cast<double>(qy - y)};
  }

  /// Segments (start edge key -> end edge key), inside on the left.
  std::unordered_map<long long, long long> segments() const {
    std::unordered_map<long long, long long> next;
    for (long long j = -1; j < m_.height; ++j) {
      for (long long i = -1; i < m_.width; ++i) {
        const bool c[4] = {inside(i, j), inside(i + 1, j), inside(i + 1, j + 1), inside(i, j + 1)};
        const int ones = c[0] + c[1] + c[2] + c[3];
        if (ones == 0 || ones == 4) continue;
        // Edges walked counter-clockwise: c0->c1, c1->c2, c2->c3, c3->c0.
        const long long keys[4] = {h_key(i, j), v_key(i + 1, j), h_key(i, j + 1), v_key(i, j)};
        int out_edges[2];
        int in_edges[2];
        int n_out = 0;
        int n_in = 0;
        for (int e = 0; e < 4; ++e) {
          const bool from = c[e];
          const bool to = c[(e + 1) % 4];
          if (from && !to) out_edges[n_out++] = e;
          if (!from && to) in_edges[n_in++] = e;
        }
        if (n_out == 1) {
          next[keys[out_edges[0]]] = keys[in_edges[0]];
          continue;
        }
        // Saddle: pair each in->out crossing with the following out->in
        // crossing when the center is inside, else with the preceding one.
        const double mean = (value(i, j) + value(i + 1, j) + value(i + 1, j + 1) + value(i, j + 1)) / 4.0;
        const bool joined = mean >= thr_;
        for (int k = 0; k < 2; ++k) {
          const int o = out_edges[k];
          const int target = joined ? (o + 1) % 4 : (o + 3) % 4;
          next[keys[o]] = keys[target];
        }
      }
    }
    return next;
  }

 private:
  bool in_raster(long long x, long long y) const { return x >= 0 && y >= 0 && x < m_.width && y < m_.height; }
  double value(long long x, long long y) const { return in_raster(x, y) ? m_.at(int(x), int(y)) : 0.0; }

  const CoverageMap& m_;
  double thr_;
  long long stride_;
};

}  // namespace

Region contour_pixels(const CoverageMap& map, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ParameterRangeError("threshold", threshold, 0.0, 1.0);
  const Marcher m(map, threshold);
  std::unordered_map<long long, long long> next = m.segments();

  // Chain segments into closed rings, starting from the smallest key for a
  // deterministic result.
  std::vector<long long> starts;
  starts.reserve(next.size());
  for (const auto& kv : next) starts.push_back(kv.first);
  std::sort(starts.begin(), starts.end());
  std::vector<Ring> outers;
  std::vector<Ring> holes;
  for (long long s : starts) {
    if (!next.count(s)) continue;
    Ring ring;
    long long k = s;
    while (true) {
      const auto it = next.find(k);
      if (it == next.end()) break;
      ring.push_back(m.crossing(k));
      const long long to = it->second;
      next.erase(it);
      k = to;
      if (k == s) break;
    }
    const double a = geometry::signed_area(ring);
    if (ring.size() < 3 || a == 0.0) continue;
    (a > 0.0 ? outers : holes).push_back(std::move(ring));
  }

  Region out;
  for (Ring& r : outers) out.push_back({std::move(r), {}});
  for (Ring& h : holes) {
    int best = -1;
    double best_area = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!geometry::contains(Polygon2D{out[i].outer, {}}, h.front())) continue;
      const double a = geometry::signed_area(out[i].outer);
      if (best < 0 || a < best_area) {
        best = static_cast<int>(i);
        best_area = a;
      }
    }
    if (best >= 0) out[best].holes.push_back(std::move(h));
  }
  return out;
}

Region contour(const CoverageMap& map, double threshold) {
  Region px = contour_pixels(map, threshold);
  Region out;
  out.reserve(px.size());
  auto to_world = [&](Ring r) {
    for (Vec2& p : r) p = map.georef.to_world(p.x, p.y);
    return r;
  };
  for (Polygon2D& p : px) {
    Polygon2D w{to_world(std::move(p.outer)), {}};
    for (Ring& h : p.holes) w.holes.push_back(to_world(std::move(h)));
    out.push_back(geometry::oriented(std::move(w)));
  }
  return out;
}

namespace {

// Nearest point on the boundary of p.
Vec2 nearest_on_boundary(const Polygon2D& p, Vec2 q) {
  Vec2 best = q;
  double best_d = 1e300;
  auto scan = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const Vec2 a = r[i], b = r[(i + 1) % r.size()];
      const Vec2 d = b - a;
      const double len2 = geometry::dot(d, d);
      const double t = len2 > 0.0 ? std::clamp(geometry::dot(q - a, d) / len2, 0.0, 1.0) : 0.0;
      const Vec2 c = a + d * t;
      const double dist = geometry::distance_sq(q, c);
      if (dist < best_d) best_d = dist, best = c;
    }
  };
  scan(p.outer);
  for (const Ring& h : p.holes) scan(h);
  return best;
}

// Clipping nearly parallel edges leaves vertices a few micrometers outside
// the lot; put them back on its boundary.
void snap_to_lot(Ring& ring, const Polygon2D& lot) {
  constexpr double kSnap = 1e-4;
  for (Vec2& v : ring) {
    if (geometry::contains(lot, v)) continue;
    const Vec2 c = nearest_on_boundary(lot, v);
    if (geometry::distance(c, v) <= kSnap) v = c;
  }
}

}  // namespace

std::vector<Polygon2D> polygonize(const CoverageMap& map, const geometry::Lot& lot, double threshold,
                                  double min_area) {
  const Region vegetation = contour(map, threshold);
  if (vegetation.empty()) return {};
  const Region clipped = geometry::intersect(vegetation, {geometry::oriented(lot.boundary)});
  std::vector<Polygon2D> out;
  const Polygon2D boundary = geometry::oriented(lot.boundary);
  for (Polygon2D p : clipped) {
    if (geometry::area(p) < min_area) continue;
    snap_to_lot(p.outer, boundary);
    for (Ring& h : p.holes) snap_to_lot(h, boundary);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace urbanveg::coverage
