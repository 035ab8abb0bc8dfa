#pragma once

#include <cstddef>
#include <vector>

#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::metrics {

using geometry::Vec2;

struct PointSet2D {
  std::vector<Vec2> points;
  bool normalized = false;
};

/// Maps `points` into the unit box: (p - frame.min) / max(frame width, height).
/// The aspect ratio is preserved. A degenerate frame maps to the origin.
PointSet2D normalize(const std::vector<Vec2>& points, const geometry::Bbox& frame);

/// For each point of `from`, the squared distance to its nearest point in `to`.
std::vector<double> nearest_sq(const std::vector<Vec2>& from, const std::vector<Vec2>& to);

/// Symmetric Chamfer distance: mean nearest squared distance from a to b
/// plus from b to a. Throws NoSampleError if either set is empty.
double chamfer(const PointSet2D& a, const PointSet2D& b);
double chamfer(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

struct SpacingStats {
  std::size_t count = 0;
  /// Nearest-neighbor distances; zero when count < 2.
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

SpacingStats spacing_stats(const std::vector<Vec2>& points);

}  // namespace urbanveg::metrics
