#include "urbanveg/coverage/coverage_map.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <sstream>

#include "urbanveg/errors.hpp"

namespace urbanveg::coverage {

geometry::Vec2 Georef::to_pixel(geometry::Vec2 w) const {
  const double det = determinant();
  const double x = w.x - c;
  const double y = w.y - f;
  return {(e * x - b * y) / det, (-d * x + a * y) / det};
}

double CoverageMap::sample(geometry::Vec2 w) const {
  const geometry::Vec2 p = georef.to_pixel(w);
  const auto col = static_cast<long long>(std::floor(p.x + 0.5));
  const auto row = static_cast<long long>(std::floor(p.y + 0.5));
  if (col < 0 || row < 0 || col >= width || row >= height) return 0.0;
  return at(static_cast<int>(col), static_cast<int>(row));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

Georef parse_worldfile(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(trim(text.substr(pos, end - pos)));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  double v[6];
  for (std::size_t i = 0; i < 6; ++i) {
    const std::string where = "worldfile line " + std::to_string(i + 1);
    if (i >= lines.size())
      throw ParseError(where, "world file has " + std::to_string(lines.size()) + " lines, expected 6");
    if (!parse_double(lines[i], v[i]))
      throw ParseError(where, where + ": '" + std::string(lines[i]) + "' is not a number");
  }
  if (lines.size() > 6) throw ParseError("worldfile line 7", "world file has more than 6 lines");
  Georef g{v[0], v[1], v[2], v[3], v[4], v[5]};
  if (g.determinant() == 0.0) throw ValidationError("worldfile", "world file transform is singular");
  return g;
}

std::string format_worldfile(const Georef& g) {
  std::ostringstream os;
  os.precision(17);
  os << g.a << '\n' << g.d << '\n' << g.b << '\n' << g.e << '\n' << g.c << '\n' << g.f << '\n';
  return os.str();
}

namespace {

Raster decode_png(std::string_view bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
    throw ParseError("image byte 0", std::string("malformed PNG: ") + image.message);
  if (image.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&image);
    throw ParseError("image byte 24", "16-bit PNG is not supported; use 8-bit");
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<png_byte> buf(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, buf.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    throw ParseError("image", "malformed PNG: " + msg);
  }
  Raster r;
  r.width = static_cast<int>(image.width);
  r.height = static_cast<int>(image.height);
  const std::size_t n = static_cast<std::size_t>(r.width) * r.height;
  r.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (color) {
      const double luma = 0.299 * buf[3 * i] + 0.587 * buf[3 * i + 1] + 0.114 * buf[3 * i + 2];
      r.values[i] = std::clamp(luma / 255.0, 0.0, 1.0);
    } else {
      r.values[i] = buf[i] / 255.0;
    }
  }
  return r;
}

class PgmReader {
 public:
  explicit PgmReader(std::string_view b) : b_(b) {}

  void skip_space() {
    while (pos_ < b_.size()) {
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(b_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long long number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(b_.data() + pos_, b_.data() + b_.size(), v);
    if (ec != std::errc() || v < 0) fail(start, std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(ptr - b_.data());
    return v;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError("image byte " + std::to_string(at), "malformed PGM at byte " + std::to_string(at) + ": " + msg);
  }

  std::size_t pos_ = 0;
  std::string_view b_;
};

Raster decode_pgm(std::string_view bytes) {
  PgmReader in(bytes);
  const bool binary = bytes[1] == '5';
  in.pos_ = 2;
  Raster r;
  const long long w = in.number("width");
  const long long h = in.number("height");
  const long long maxval = in.number("maxval");
  if (w <= 0 || h <= 0) in.fail(in.pos_, "width and height must be positive");
  if (maxval <= 0 || maxval > 255) in.fail(in.pos_, "only 8-bit PGM (maxval 1..255) is supported");
  r.width = static_cast<int>(w);
  r.height = static_cast<int>(h);
  const std::size_t n = static_cast<std::size_t>(w * h);
  r.values.resize(n);
  if (binary) {
    if (in.pos_ >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[in.pos_])))
      in.fail(in.pos_, "expected whitespace after maxval");
    const std::size_t start = in.pos_ + 1;
    if (bytes.size() < start + n) in.fail(bytes.size(), "pixel data truncated: expected " + std::to_string(n) + " bytes");
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<unsigned char>(bytes[start + i]);
      if (v > maxval) in.fail(start + i, "pixel value exceeds maxval");
      r.values[i] = static_cast<double>(v) / static_cast<double>(maxval);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t at = in.pos_;
      const long long v = in.number("pixel value");
      if (v > maxval) in.fail(at, "pixel value exceeds maxval");
      r.values[i] = static_cast<double>(v) / static_cast<double>(maxval);
    }
  }
  return r;
}

}  // namespace

Raster decode_image(std::string_view bytes) {
  static constexpr unsigned char kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '2')) return decode_pgm(bytes);
  throw ParseError("image byte 0", "unrecognized image format (expected PNG or PGM)");
}

namespace {

std::vector<png_byte> to_bytes(const Raster& r) {
  std::vector<png_byte> out(r.values.size());
  for (std::size_t i = 0; i < r.values.size(); ++i)
    out[i] = static_cast<png_byte>(std::lround(std::clamp(r.values[i], 0.0, 1.0) * 255.0));
  return out;
}

}  // namespace

std::string encode_png(const Raster& r) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(r.width);
  image.height = static_cast<png_uint_32>(r.height);
  image.format = PNG_FORMAT_GRAY;
  const std::vector<png_byte> px = to_bytes(r);
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, px.data(), 0, nullptr))
    throw IoError("png", std::string("PNG encoding failed: ") + image.message);
  std::string out(size, '\0');
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, px.data(), 0, nullptr))
    throw IoError("png", std::string("PNG encoding failed: ") + image.message);
  out.resize(size);
  return out;
}

std::string encode_pgm(const Raster& r) {
  std::string out = "P5\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n255\n";
  const std::vector<png_byte> px = to_bytes(r);
  out.append(reinterpret_cast<const char*>(px.data()), px.size());
  return out;
}

CoverageMap load_coverage(std::string_view image_bytes, std::string_view worldfile_text) {
  Raster r = decode_image(image_bytes);
  CoverageMap m;
  m.width = r.width;
  m.height = r.height;
  m.values = std::move(r.values);
  m.georef = parse_worldfile(worldfile_text);
  return m;
}

}  // namespace urbanveg::coverage
