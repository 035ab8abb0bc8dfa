#pragma once

#include <string>
#include <vector>

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/ppm/context.hpp"
#include "urbanveg/sampling/poisson.hpp"

namespace urbanveg::fixtures {

using geometry::Lot;
using geometry::Polygon2D;
using geometry::Vec2;

Polygon2D polygon(std::vector<Vec2> outer, std::vector<geometry::Ring> holes = {});

/// L-shape: w x h rectangle with the top-right cut_w x cut_h corner removed.
Polygon2D l_shape(double w, double h, double cut_w, double cut_h, Vec2 origin = {});

/// Twenty lots with varied shapes, holes, buildings, entrances and
/// driveways. Every lot is valid; one has an empty placement region.
std::vector<Lot> fixture_lots();

/// length x width straight corridor lot along the x axis, no buildings.
Lot corridor(double length, double width);

/// Ten lots on a 2 x 5 block grid with distinct zone models.
std::vector<Lot> ten_lot_layout();

/// Brute-force count of pairs closer than the sum of their radii.
std::size_t separation_violations(const std::vector<sampling::Sample>& s);

/// Distance from q to the polygon boundary by scanning every edge.
double brute_distance_to_boundary(const Polygon2D& p, Vec2 q);

/// Even-odd crossing test, boundary excluded. Independent of the library's
/// containment routine.
bool brute_inside(const Polygon2D& p, Vec2 q);

}  // namespace urbanveg::fixtures
