#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "urbanveg/coverage/coverage_map.hpp"
#include "urbanveg/coverage/placement.hpp"
#include "urbanveg/coverage/polygonize.hpp"
#include "urbanveg/errors.hpp"
#include "urbanveg/geometry/polygon_ops.hpp"
#include "urbanveg/ppm/strategies.hpp"

using namespace urbanveg;
using namespace urbanveg::coverage;
using geometry::rectangle;
using geometry::Vec2;
namespace fx = urbanveg::fixtures;

namespace {

// Raster of `px` m pixels covering [x0, x0 + w*px] x [y0, y0 + h*px], row 0 at the top.
CoverageMap make_map(int w, int h, double px, Vec2 origin, double fill) {
  CoverageMap m;
  m.width = w;
  m.height = h;
  m.values.assign(static_cast<std::size_t>(w) * h, fill);
  m.georef = {px, 0, 0, -px, origin.x + px / 2, origin.y + h * px - px / 2};
  return m;
}

geometry::Lot square_lot(double s) {
  geometry::Lot l;
  l.id = "c";
  l.boundary = rectangle(0, 0, s, s);
  return l;
}

double total_area(const std::vector<geometry::Polygon2D>& ps) {
  double a = 0;
  for (const auto& p : ps) a += geometry::area(p);
  return a;
}

}  // namespace

TEST_SUITE("coverage") {
  TEST_CASE("PNG and PGM decoding") {
    const Raster white{2, 2, {1, 1, 1, 1}};
    const CoverageMap m = load_coverage(encode_png(white), "1\n0\n0\n-1\n0\n0\n");
    REQUIRE(m.values.size() == 4);
    for (double v : m.values) CHECK(v == 1.0);

    const Raster gray{1, 1, {128.0 / 255.0}};
    CHECK(decode_image(encode_png(gray)).values[0] == doctest::Approx(0.502).epsilon(0.004));
    CHECK(decode_image(encode_pgm(gray)).values[0] == doctest::Approx(0.502).epsilon(0.004));

    const Raster ascii = decode_image("P2\n# comment\n3 1\n255\n0 128 255\n");
    REQUIRE(ascii.width == 3);
    CHECK(ascii.values[0] == 0.0);
    CHECK(ascii.values[2] == 1.0);

    CHECK_THROWS_AS(decode_image("not an image"), ParseError);
    CHECK_THROWS_AS(decode_image("P5\n4 4\n255\n\x01\x02"), ParseError);
  }

  TEST_CASE("world files") {
    CHECK_THROWS_AS(parse_worldfile("1\n0\n0\n-1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_worldfile("1\n0\n0\nx\n0\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_worldfile("0\n0\n0\n0\n5\n5\n"), ValidationError);
    const Georef g = parse_worldfile("0.25\n0.0\n0.0\n-0.25\n100.125\n200.875\n\n");
    CHECK(g.a == 0.25);
    CHECK(g.e == -0.25);
    CHECK(g.c == 100.125);
    CHECK(parse_worldfile(format_worldfile(g)).f == g.f);
    const Vec2 w = g.to_world(3, 7);
    const Vec2 p = g.to_pixel(w);
    CHECK(p.x == doctest::Approx(3.0));
    CHECK(p.y == doctest::Approx(7.0));
  }

  TEST_CASE("all-white map reproduces the lot") {
    const auto lot = square_lot(20);
    const auto m = make_map(100, 100, 0.25, {-2.5, -2.5}, 1.0);
    const auto ps = polygonize(m, lot);
    REQUIRE(ps.size() == 1);
    CHECK(geometry::area(ps[0]) == doctest::Approx(400.0).epsilon(0.02));
  }

  TEST_CASE("all-black map yields nothing") {
    CHECK(polygonize(make_map(100, 100, 0.25, {-2.5, -2.5}, 0.0), square_lot(20)).empty());
  }

  TEST_CASE("half split map: pixel-count oracle") {
    auto m = make_map(80, 80, 0.25, {0, 0}, 0.0);
    for (int r = 0; r < 80; ++r)
      for (int c = 0; c < 40; ++c) m.values[r * 80 + c] = 1.0;
    const auto lot = square_lot(20);
    double oracle = 0.0;
    for (int r = 0; r < 80; ++r)
      for (int c = 0; c < 80; ++c)
        if (m.at(c, r) >= 0.5 && geometry::contains(lot.boundary, m.georef.to_world(c, r))) oracle += 0.0625;
    const auto ps = polygonize(m, lot);
    REQUIRE(ps.size() == 1);
    CHECK(geometry::area(ps[0]) == doctest::Approx(oracle).epsilon(0.02));
    CHECK(geometry::area(ps[0]) == doctest::Approx(200.0).epsilon(0.02));
  }

  TEST_CASE("saddle cells follow the corner mean") {
    CoverageMap m;
    m.width = 2;
    m.height = 2;
    m.values = {1, 0, 0, 1};
    CHECK(contour_pixels(m, 0.5).size() == 1);
    CHECK(contour_pixels(m, 0.9).size() == 2);
  }

  TEST_CASE("holes survive polygonization") {
    auto m = make_map(80, 80, 0.25, {0, 0}, 1.0);
    for (int r = 30; r < 50; ++r)
      for (int c = 30; c < 50; ++c) m.values[r * 80 + c] = 0.0;
    const auto ps = polygonize(m, square_lot(20));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].holes.size() == 1);
    CHECK(total_area(ps) == doctest::Approx(400.0 - 25.0).epsilon(0.02));
  }

  TEST_CASE("stencil containment and threshold monotonicity") {
    auto m = make_map(120, 120, 0.25, {-5, -5}, 0.0);
    Rng rng(9);
    for (int r = 0; r < 120; ++r)
      for (int c = 0; c < 120; ++c)
        m.values[r * 120 + c] = std::clamp(0.5 + 0.4 * std::sin(c * 0.11) * std::cos(r * 0.07) + rng.uniform(-0.1, 0.1), 0.0, 1.0);
    for (const auto& lot : {square_lot(20), fx::fixture_lots()[2]}) {
      double prev = 1e300;
      for (int k = 0; k <= 10; ++k) {
        const auto ps = polygonize(m, lot, k / 10.0);
        const double a = total_area(ps);
        CHECK(a <= prev + 1e-6);
        prev = a;
        for (const auto& p : ps) {
          CHECK_NOTHROW(geometry::validate(p, "out"));
          CHECK(geometry::area(p) >= 1.0);
          for (Vec2 v : p.outer)
            CHECK((fx::brute_inside(lot.boundary, v) || fx::brute_distance_to_boundary(lot.boundary, v) < 1e-6));
        }
      }
    }
    CHECK_THROWS_AS(polygonize(m, square_lot(20), 1.5), ParameterRangeError);
  }

  TEST_CASE("coverage-driven placement") {
    const auto lot = fx::fixture_lots()[3];
    const auto& lib = growth::default_species_library();
    ppm::PositionalParams p;
    Rng rng(1);
    CHECK(place_from_coverage(lot, {}, p, {}, lib, rng).empty());

    const std::vector<geometry::Polygon2D> two{rectangle(1, 1, 12, 12), rectangle(18, 18, 29, 29)};
    p.mu = 1.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng r(s);
      const auto seeds = place_from_coverage(lot, two, p, {}, lib, r);
      CHECK_FALSE(seeds.empty());
      for (const auto& x : seeds)
        CHECK((geometry::contains(two[0], x.position) || geometry::contains(two[1], x.position)));
    }

    // Whole lot as the region: the same positions as the random strategy.
    ppm::PPM random;
    random.positional = p;
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng a(s), b(s);
      const auto seeds = place_from_coverage(lot, {lot.boundary}, p, {}, lib, a);
      const auto samples = ppm::place(random, lot, b);
      REQUIRE(seeds.size() == samples.size());
      for (std::size_t i = 0; i < seeds.size(); ++i) CHECK(seeds[i].position == samples[i].position);
    }
  }
}
