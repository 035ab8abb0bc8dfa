#pragma once

#include <vector>

#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::geometry {

/// Regular grid of square cells in a frame rotated by `eta_degrees`.
struct Lattice {
  double pitch = 0.0;
  double eta_radians = 0.0;
  /// Cell centers in lattice (rotated) coordinates.
  std::vector<Vec2> local_centers;

  Vec2 to_world(Vec2 local) const { return rotate(local, eta_radians); }
  Vec2 to_local(Vec2 world) const { return rotate(world, -eta_radians); }
};

/// All cells of pitch `omega` covering the bounding box of `r` in the frame
/// rotated by `eta_degrees`, anchored at the box minimum. An axis shorter
/// than `omega` gets a single cell centered on the box midpoint.
/// Throws ParameterRangeError for omega <= 0.
Lattice lattice_over(const Region& r, double omega, double eta_degrees);

/// Lattice cell centers (world coordinates) that fall inside `r`.
std::vector<Vec2> lattice_centers(const Region& r, double omega, double eta_degrees);
std::vector<Vec2> lattice_centers(const Polygon2D& p, double omega, double eta_degrees);

}  // namespace urbanveg::geometry
