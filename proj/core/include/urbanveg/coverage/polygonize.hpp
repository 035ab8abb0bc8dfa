#pragma once

#include <vector>

#include "urbanveg/coverage/coverage_map.hpp"
#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::coverage {

/// Marching-squares contours of {value >= threshold} on the pixel-center
/// lattice, in pixel coordinates (x = col, y = row). Pixels outside the
/// raster count as below threshold; contours between an edge pixel and the
/// outside pass half a pixel beyond its center. Saddles are resolved by the
/// mean of the four corners.
geometry::Region contour_pixels(const CoverageMap& map, double threshold);

/// Contours mapped to world coordinates through the georeference.
geometry::Region contour(const CoverageMap& map, double threshold);

/// Vegetated regions of `map` inside the lot boundary; parts smaller than
/// `min_area` are dropped. Throws ParameterRangeError for threshold outside [0, 1].
std::vector<geometry::Polygon2D> polygonize(const CoverageMap& map, const geometry::Lot& lot, double threshold = 0.5,
                                            double min_area = 1.0);

}  // namespace urbanveg::coverage
