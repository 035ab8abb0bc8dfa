#pragma once

#include <vector>

#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::geometry {

struct AxisEdge {
  int a = 0;
  int b = 0;
  double length = 0.0;
};

/// Undirected graph approximating a polygon's medial axis.
struct AxisGraph {
  std::vector<Vec2> vertices;
  std::vector<AxisEdge> edges;

  bool empty() const { return edges.empty(); }
  double total_length() const;
};

struct MedialAxisOptions {
  /// Maximum spacing of boundary samples fed to the Voronoi diagram.
  double sample_spacing = 0.25;
  /// Leaf branches shorter than this are removed.
  double prune_length = 1.0;
};

/// Approximate medial axis: Voronoi diagram of the densely sampled boundary,
/// restricted to edges strictly inside `p`, with short spurs pruned.
/// Returns an empty graph for degenerate polygons (area < 1e-6 m²).
AxisGraph medial_axis(const Polygon2D& p, const MedialAxisOptions& options = {});

/// Vertex sequence of an approximately longest path (double sweep; exact on
/// trees). Empty for an empty graph.
std::vector<int> longest_path(const AxisGraph& g);

/// Points spaced `delta` apart in arc length along the axis.
///
/// The walk starts at an endpoint of the longest path and runs depth-first,
/// following the longest path before any side branch; residual spacing is
/// carried into every branch leaving a junction. Returned in placement order.
/// Throws ParameterRangeError for delta <= 0.
std::vector<Vec2> equidistant_along(const AxisGraph& g, double delta);

}  // namespace urbanveg::geometry
