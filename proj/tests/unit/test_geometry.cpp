#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "urbanveg/errors.hpp"
#include "urbanveg/geometry/lattice.hpp"
#include "urbanveg/geometry/medial_axis.hpp"
#include "urbanveg/geometry/polygon_ops.hpp"

using namespace urbanveg;
using namespace urbanveg::geometry;
namespace fx = urbanveg::fixtures;

namespace {

Lot lot_with(Polygon2D boundary, std::vector<Polygon2D> buildings = {}) {
  Lot l;
  l.id = "t";
  l.boundary = std::move(boundary);
  for (auto& b : buildings) l.buildings.push_back({std::move(b), std::nullopt, {}});
  return l;
}

// Distances from q to each edge of the polygon, ascending.
std::vector<double> edge_distances(const Polygon2D& p, Vec2 q) {
  std::vector<double> d;
  auto scan = [&](const Ring& r) {
    for (std::size_t i = 0; i < r.size(); ++i) d.push_back(distance_to_segment(q, r[i], r[(i + 1) % r.size()]));
  };
  scan(p.outer);
  for (const Ring& h : p.holes) scan(h);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("contains: unit square and hole") {
    const Polygon2D sq = rectangle(0, 0, 1, 1);
    CHECK(contains(sq, {0.5, 0.5}));
    CHECK_FALSE(contains(sq, {2, 2}));
    CHECK(contains(sq, {1.0, 0.5}));  // boundary counts as inside
    const Polygon2D holed = fx::polygon(rectangle(0, 0, 10, 10).outer, {rectangle(4, 4, 6, 6).outer});
    CHECK_FALSE(contains(holed, {5, 5}));
    CHECK(contains(holed, {2, 2}));
  }

  TEST_CASE("validate rejects self-intersecting rings and names the ring") {
    const Polygon2D bowtie{{{0, 0}, {10, 10}, {10, 0}, {0, 10}}, {}};
    try {
      validate(bowtie, "lot 'x'");
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.field().find("lot 'x'") != std::string::npos);
    }
    CHECK_THROWS_AS(validate(Polygon2D{{{0, 0}, {1, 0}}, {}}, "p"), ValidationError);
    CHECK_NOTHROW(validate(rectangle(0, 0, 1, 1), "p"));
  }

  TEST_CASE("plantable_region arithmetic") {
    CHECK(area(plantable_region(lot_with(rectangle(0, 0, 10, 10), {rectangle(4, 4, 6, 6)}))) ==
          doctest::Approx(96.0));
    const Region whole = plantable_region(lot_with(rectangle(0, 0, 10, 10)));
    REQUIRE(whole.size() == 1);
    CHECK(area(whole) == doctest::Approx(100.0));
    CHECK(plantable_region(lot_with(rectangle(0, 0, 10, 10), {rectangle(0, 0, 10, 10)})).empty());
  }

  TEST_CASE("plantable_region excludes building interiors") {
    for (const Lot& lot : fx::fixture_lots()) {
      const Region region = plantable_region(lot);
      Rng rng(7);
      for (const Building& b : lot.buildings) {
        int leaked = 0;
        for (int i = 0; i < 10000; ++i) {
          const Vec2 q = random_point_in(b.footprint, rng);
          if (distance_to_boundary(b.footprint, q) > 1e-6 && contains(region, q)) ++leaked;
        }
        CHECK_MESSAGE(leaked == 0, lot.id);
      }
    }
  }

  TEST_CASE("boundary_band arithmetic") {
    CHECK(area(boundary_band(rectangle(0, 0, 10, 10), 2.0)) == doctest::Approx(64.0).epsilon(1e-6));
    CHECK(boundary_band(rectangle(0, 0, 10, 10), 0.0).empty());
    CHECK_THROWS_AS(boundary_band(rectangle(0, 0, 10, 10), -1.0), ParameterRangeError);
  }

  TEST_CASE("boundary_band wider than half-width is the whole polygon (point oracle)") {
    const Polygon2D sq = rectangle(0, 0, 8, 8);
    const Region band = boundary_band(sq, 5.0);
    CHECK(area(band) == doctest::Approx(64.0).epsilon(1e-6));
    int mismatches = 0;
    for (int i = 0; i < 80; ++i)
      for (int j = 0; j < 80; ++j) {
        const Vec2 q{0.05 + 0.1 * i, 0.05 + 0.1 * j};
        const bool expected = fx::brute_distance_to_boundary(sq, q) <= 5.0;
        if (expected != contains(band, q)) ++mismatches;
      }
    CHECK(mismatches == 0);
  }

  TEST_CASE("boundary_band points lie within beta of the boundary") {
    Rng rng(11);
    for (const Lot& lot : fx::fixture_lots()) {
      for (double beta : {0.5, 2.0, 4.0, 9.0}) {
        const Region band = boundary_band(lot.boundary, beta);
        if (band.empty()) continue;
        for (int i = 0; i < 300; ++i) {
          const Vec2 q = random_point_in(band, rng);
          CHECK((fx::brute_inside(lot.boundary, q) || fx::brute_distance_to_boundary(lot.boundary, q) < 1e-6));
          CHECK(fx::brute_distance_to_boundary(lot.boundary, q) <= beta + 1e-6);
        }
      }
    }
  }

  TEST_CASE("medial_axis of a 10x4 rectangle has a 6 m central segment") {
    const AxisGraph g = medial_axis(rectangle(0, 0, 10, 4));
    double central = 0.0;
    for (const AxisEdge& e : g.edges) {
      const Vec2 a = g.vertices[e.a];
      const Vec2 b = g.vertices[e.b];
      if (std::abs(a.y - 2.0) < 0.05 && std::abs(b.y - 2.0) < 0.05) central += e.length;
    }
    CHECK(central == doctest::Approx(6.0).epsilon(0.05));
  }

  TEST_CASE("medial_axis of a square follows the diagonals to the center") {
    const AxisGraph g = medial_axis(rectangle(0, 0, 10, 10));
    REQUIRE_FALSE(g.empty());
    bool center = false;
    for (Vec2 v : g.vertices) {
      const double off = std::min(std::abs(v.x - v.y), std::abs(v.x + v.y - 10.0)) / std::numbers::sqrt2;
      CHECK(off < 0.2);
      if (distance(v, {5, 5}) < 0.2) center = true;
    }
    CHECK(center);
    CHECK(g.total_length() == doctest::Approx(4 * 5 * std::numbers::sqrt2).epsilon(0.05));
  }

  TEST_CASE("medial_axis vertices of an L-shape are inside") {
    const Polygon2D l = fx::l_shape(30, 20, 18, 12);
    const AxisGraph g = medial_axis(l);
    REQUIRE_FALSE(g.empty());
    for (Vec2 v : g.vertices) CHECK(fx::brute_inside(l, v));
  }

  TEST_CASE("medial_axis points are equidistant from two boundary features") {
    for (const Polygon2D& p : {rectangle(0, 0, 10, 4), fx::l_shape(30, 20, 18, 12), rectangle(0, 0, 40, 25)}) {
      const AxisGraph g = medial_axis(p);
      REQUIRE_FALSE(g.empty());
      const double total = g.total_length();
      int checked = 0;
      int bad = 0;
      for (const AxisEdge& e : g.edges) {
        const int k = std::max(1, static_cast<int>(std::ceil(1000.0 * e.length / total)));
        for (int i = 0; i < k; ++i) {
          const double t = (i + 0.5) / k;
          const Vec2 q = g.vertices[e.a] * (1 - t) + g.vertices[e.b] * t;
          const auto d = edge_distances(p, q);
          ++checked;
          if (d[1] - d[0] > 0.05 * d[1]) ++bad;
        }
      }
      CHECK(checked >= 1000);
      CHECK(bad == 0);
    }
  }

  TEST_CASE("lattice_centers grid arithmetic") {
    auto c = lattice_centers(rectangle(0, 0, 10, 10), 5.0, 0.0);
    std::sort(c.begin(), c.end(), [](Vec2 a, Vec2 b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
    REQUIRE(c.size() == 4);
    CHECK(c[0].x == doctest::Approx(2.5));
    CHECK(c[0].y == doctest::Approx(2.5));
    CHECK(c[1].x == doctest::Approx(7.5));
    CHECK(c[3].y == doctest::Approx(7.5));

    const auto one = lattice_centers(rectangle(0, 0, 4, 3), 10.0, 0.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == doctest::Approx(2.0));
    CHECK(one[0].y == doctest::Approx(1.5));
    CHECK_THROWS_AS(lattice_centers(rectangle(0, 0, 4, 3), 0.0, 0.0), ParameterRangeError);
  }

  TEST_CASE("lattice_centers at 45 degrees matches a brute-force rasterization") {
    const Polygon2D sq = rectangle(0, 0, 20, 20);
    const double omega = 5.0;
    const auto c0 = lattice_centers(sq, omega, 0.0);
    const auto c45 = lattice_centers(sq, omega, 45.0);
    // Oracle: rotated lattice anchored at the rotated bounding box minimum.
    const double a = std::numbers::pi / 4;
    double lx = 1e9, ly = 1e9, hx = -1e9, hy = -1e9;
    for (Vec2 v : sq.outer) {
      const Vec2 l = rotate(v, -a);
      lx = std::min(lx, l.x), ly = std::min(ly, l.y), hx = std::max(hx, l.x), hy = std::max(hy, l.y);
    }
    std::size_t brute = 0;
    for (double y = ly + omega / 2; y < hy; y += omega)
      for (double x = lx + omega / 2; x < hx; x += omega)
        if (contains(sq, rotate({x, y}, a))) ++brute;
    CHECK(c45.size() == brute);
    const double row = std::ceil(20.0 * std::numbers::sqrt2 / omega);
    CHECK(std::abs(static_cast<double>(c45.size()) - static_cast<double>(c0.size())) <= row);
  }

  TEST_CASE("lattice_centers with eta 0 are congruent to omega/2 modulo omega") {
    for (const Lot& lot : fx::fixture_lots()) {
      for (double omega : {3.0, 7.5}) {
        const Bbox bb = bbox(lot.boundary);
        for (Vec2 c : lattice_centers(lot.boundary, omega, 0.0)) {
          if (bb.width() < omega || bb.height() < omega) continue;
          const double mx = std::fmod(c.x - bb.min.x - omega / 2, omega);
          const double my = std::fmod(c.y - bb.min.y - omega / 2, omega);
          CHECK(std::min(std::abs(mx), omega - std::abs(mx)) < 1e-9);
          CHECK(std::min(std::abs(my), omega - std::abs(my)) < 1e-9);
        }
      }
    }
  }

  TEST_CASE("building_envelope extends 6 m perpendicular to a wall") {
    const Lot lot = lot_with(rectangle(-50, -50, 50, 50), {rectangle(0, 0, 10, 1)});
    const Region env = building_envelope(lot, {6.0, 1.5});
    CHECK(contains(env, {5, -5.9}));
    CHECK_FALSE(contains(env, {5, -6.1}));
    CHECK(contains(env, {5, 6.9}));
    CHECK_FALSE(contains(env, {5, 7.1}));
    CHECK(building_envelope(lot_with(rectangle(0, 0, 10, 10))).empty());
  }

  TEST_CASE("entrance edges double the offset and driveways are buffered") {
    Lot lot = lot_with(rectangle(-50, -50, 50, 50));
    lot.buildings.push_back({rectangle(0, 0, 10, 10), std::nullopt, {0}});
    lot.driveways.push_back({{30, -40}, {30, 40}});
    const Region env = building_envelope(lot, {6.0, 1.5});
    CHECK(contains(env, {5, -11.9}));   // edge 0 runs along y = 0
    CHECK_FALSE(contains(env, {5, -12.1}));
    CHECK_FALSE(contains(env, {5, 16.1}));
    CHECK(contains(env, {31.4, 0}));
    CHECK_FALSE(contains(env, {31.6, 0}));
    CHECK_THROWS_AS(building_envelope(lot, {-1.0, 1.5}), ParameterRangeError);
  }

  TEST_CASE("overlapping building buffers merge (rasterized union oracle)") {
    const Polygon2D a = rectangle(0, 0, 10, 10);
    const Polygon2D b = rectangle(12, 4, 22, 14);
    const Region env = building_envelope(lot_with(rectangle(-50, -50, 80, 80), {a, b}), {6.0, 1.5});
    CHECK(env.size() == 1);
    // Square corners miter to the expanded rectangles.
    const Polygon2D ea = rectangle(-6, -6, 16, 16);
    const Polygon2D eb = rectangle(6, -2, 28, 20);
    double raster = 0.0;
    const double h = 0.05;
    for (double x = -10 + h / 2; x < 32; x += h)
      for (double y = -10 + h / 2; y < 24; y += h)
        if (fx::brute_inside(ea, {x, y}) || fx::brute_inside(eb, {x, y})) raster += h * h;
    CHECK(area(env) == doctest::Approx(raster).epsilon(0.005));
    CHECK(area(env) < area(ea) + area(eb));
  }

  TEST_CASE("building_envelope grows monotonically with the wall offset") {
    for (const Lot& lot : fx::fixture_lots()) {
      if (lot.buildings.empty()) continue;
      Region prev;
      double prev_area = 0.0;
      for (double w : {1.0, 3.0, 6.0, 9.0}) {
        const Region env = building_envelope(lot, {w, 1.5});
        CHECK(area(env) >= prev_area - 1e-9);
        Rng rng(3);
        if (!prev.empty())
          for (int i = 0; i < 500; ++i) CHECK(contains(env, random_point_in(prev, rng)));
        prev = env;
        prev_area = area(env);
      }
    }
  }

  TEST_CASE("random_point_in is deterministic and inside") {
    const Polygon2D sq = rectangle(0, 0, 1, 1);
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) {
      const Vec2 p = random_point_in(sq, a);
      CHECK(p == random_point_in(sq, b));
      CHECK(p.x >= 0.0);
      CHECK(p.x <= 1.0);
      CHECK(p.y >= 0.0);
      CHECK(p.y <= 1.0);
    }
    CHECK_THROWS_AS(random_point_in(Region{}, a), NoSampleError);
  }

  TEST_CASE("random_point_in is uniform over an L-shape (chi-squared)") {
    const Polygon2D l = fx::l_shape(4, 4, 2, 2);
    std::vector<int> counts(16, 0);
    Rng rng(2024);
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const Vec2 p = random_point_in(l, rng);
      const int cx = std::min(3, static_cast<int>(p.x));
      const int cy = std::min(3, static_cast<int>(p.y));
      ++counts[cy * 4 + cx];
    }
    double chi2 = 0.0;
    int cells = 0;
    for (int cy = 0; cy < 4; ++cy)
      for (int cx = 0; cx < 4; ++cx) {
        const bool in = !(cx >= 2 && cy >= 2);
        if (!in) {
          CHECK(counts[cy * 4 + cx] == 0);
          continue;
        }
        const double expected = n / 12.0;
        chi2 += (counts[cy * 4 + cx] - expected) * (counts[cy * 4 + cx] - expected) / expected;
        ++cells;
      }
    REQUIRE(cells == 12);
    CHECK(chi2 < 31.26);  // 0.999 quantile, 11 degrees of freedom
  }
}
