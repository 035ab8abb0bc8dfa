#include "urbanveg/geometry/lattice.hpp"

#include <cmath>
#include <numbers>

#include "urbanveg/errors.hpp"

namespace urbanveg::geometry {

namespace {

// Cell centers along one axis of extent [lo, hi].
std::vector<double> axis_centers(double lo, double hi, double pitch) {
  const double extent = hi - lo;
  if (extent < pitch) return {(lo + hi) / 2.0};
  const auto cells = static_cast<int>(std::ceil(extent / pitch - 1e-9));
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(cells));
  for (int i = 0; i < cells; ++i) c.push_back(lo + pitch * (i + 0.5));
  return c;
}

}  // namespace

Lattice lattice_over(const Region& r, double omega, double eta_degrees) {
  if (!(omega > 0.0)) throw ParameterRangeError("omega", "omega must be > 0");
  Lattice lat;
  lat.pitch = omega;
  lat.eta_radians = eta_degrees * std::numbers::pi / 180.0;
  if (r.empty()) return lat;

  Ring rotated;
  for (const Polygon2D& p : r)
    for (const Vec2& v : p.outer) rotated.push_back(lat.to_local(v));
  const Bbox box = bbox(rotated);
  for (double y : axis_centers(box.min.y, box.max.y, omega))
    for (double x : axis_centers(box.min.x, box.max.x, omega)) lat.local_centers.push_back({x, y});
  return lat;
}

std::vector<Vec2> lattice_centers(const Region& r, double omega, double eta_degrees) {
  const Lattice lat = lattice_over(r, omega, eta_degrees);
  std::vector<Vec2> out;
  for (const Vec2& c : lat.local_centers) {
    const Vec2 w = lat.to_world(c);
    if (contains(r, w)) out.push_back(w);
  }
  return out;
}

std::vector<Vec2> lattice_centers(const Polygon2D& p, double omega, double eta_degrees) {
  return lattice_centers(Region{p}, omega, eta_degrees);
}

}  // namespace urbanveg::geometry
