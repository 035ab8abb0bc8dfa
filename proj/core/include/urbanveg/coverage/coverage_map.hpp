#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "urbanveg/geometry/polygon.hpp"

namespace urbanveg::coverage {

/// Six-coefficient pixel-to-world affine transform of a world file:
/// x = a * col + b * row + c, y = d * col + e * row + f, referring to pixel
/// centers.
struct Georef {
  double a = 1.0;
  double d = 0.0;
  double b = 0.0;
  double e = -1.0;
  double c = 0.0;
  double f = 0.0;

  double determinant() const { return a * e - b * d; }
  geometry::Vec2 to_world(double col, double row) const { return {a * col + b * row + c, d * col + e * row + f}; }
  /// Inverse transform, (col, row) as a Vec2.
  geometry::Vec2 to_pixel(geometry::Vec2 w) const;
};

/// Grayscale raster with values in [0, 1], row-major, row 0 first.
struct CoverageMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;
  Georef georef;

  double at(int col, int row) const { return values[static_cast<std::size_t>(row) * width + col]; }
  /// Value of the pixel containing world point `w`; 0 outside the raster.
  double sample(geometry::Vec2 w) const;
};

/// Parses the six numeric lines of a world file, in the standard order
/// a, d, b, e, c, f. Blank trailing lines are ignored.
/// Throws ParseError naming the offending line; ValidationError when the
/// transform is singular.
Georef parse_worldfile(std::string_view text);
std::string format_worldfile(const Georef& g);

struct Raster {
  int width = 0;
  int height = 0;
  std::vector<double> values;
};

/// Decodes 8-bit PNG (gray, gray+alpha, RGB, RGBA; color reduced to luma
/// 0.299 R + 0.587 G + 0.114 B) or binary/ASCII PGM, chosen by magic bytes.
/// Throws ParseError with a byte position for malformed input.
Raster decode_image(std::string_view bytes);

/// Encoders used to write fixtures: 8-bit grayscale, values rounded to 0..255.
std::string encode_png(const Raster& r);
std::string encode_pgm(const Raster& r);

CoverageMap load_coverage(std::string_view image_bytes, std::string_view worldfile_text);

}  // namespace urbanveg::coverage
