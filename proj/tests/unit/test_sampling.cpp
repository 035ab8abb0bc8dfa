#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "urbanveg/errors.hpp"
#include "urbanveg/geometry/polygon_ops.hpp"
#include "urbanveg/sampling/poisson.hpp"

using namespace urbanveg;
using namespace urbanveg::sampling;
using geometry::rectangle;
namespace fx = urbanveg::fixtures;

namespace {

std::vector<Sample> n_samples(int n) {
  std::vector<Sample> s;
  for (int i = 0; i < n; ++i) s.push_back({{double(i), 0.0}, 1.0, true});
  return s;
}

std::size_t active_count(const std::vector<Sample>& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](const Sample& x) { return x.active; }));
}

}  // namespace

TEST_SUITE("sampling") {
  TEST_CASE("fixed radii keep centers at least two radii apart") {
    Rng rng(1);
    const auto s = poisson_variable_radii({rectangle(0, 0, 100, 100)}, {3.0, 0.0}, rng);
    REQUIRE(s.size() > 50);
    double min_d = 1e9;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].radius == 3.0);
      for (std::size_t j = i + 1; j < s.size(); ++j) min_d = std::min(min_d, distance(s[i].position, s[j].position));
    }
    CHECK(min_d >= 6.0);
  }

  TEST_CASE("region narrower than one envelope fits at most one sample") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      CHECK(poisson_variable_radii({rectangle(0, 0, 3, 3)}, {3.0, 0.0}, rng).size() <= 1);
    }
  }

  TEST_CASE("variable radii: brute-force separation and containment") {
    const auto lots = fx::fixture_lots();
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto& lot = lots[seed % lots.size()];
      Rng rng(seed);
      const RadiusModel model{1.0 + 0.2 * static_cast<double>(seed % 10), 0.05 * static_cast<double>(seed % 41)};
      const auto s = poisson_variable_radii({lot.boundary}, model, rng);
      CHECK(fx::separation_violations(s) == 0);
      for (const Sample& x : s) CHECK(geometry::contains(lot.boundary, x.position));
    }
  }

  TEST_CASE("empty region yields nothing") {
    Rng rng(3);
    CHECK(poisson_variable_radii({}, {3.0, 0.5}, rng).empty());
  }

  TEST_CASE("determinism") {
    Rng a(77), b(77);
    const geometry::Region r{fx::l_shape(40, 30, 15, 10)};
    CHECK(poisson_variable_radii(r, {2.5, 0.7}, a) == poisson_variable_radii(r, {2.5, 0.7}, b));
  }

  TEST_CASE("saturation lower bound") {
    for (double mu : {1.0, 2.0, 3.13, 5.0}) {
      Rng rng(5);
      const double w = 80, h = 50;
      const auto s = poisson_variable_radii({rectangle(0, 0, w, h)}, {mu, 0.0}, rng);
      CHECK(s.size() >= static_cast<std::size_t>(std::floor(w / (4 * mu)) * std::floor(h / (4 * mu))));
    }
  }

  TEST_CASE("radius model validation and truncation") {
    CHECK_THROWS_AS((RadiusModel{0.5, 0.0}.validate()), ParameterRangeError);
    CHECK_THROWS_AS((RadiusModel{3.0, 2.5}.validate()), ParameterRangeError);
    CHECK_NOTHROW((RadiusModel{10.0, 2.0}.validate()));
    Rng rng(8);
    const RadiusModel m{1.0, 2.0};
    for (int i = 0; i < 5000; ++i) {
      const double r = m.draw(rng);
      CHECK(r > 0.1);
      CHECK(r < 10.0);
    }
  }

  TEST_CASE("thin: exact counts") {
    Rng rng(4);
    CHECK(active_count(thin(n_samples(10), 1.0, rng)) == 10);
    CHECK(active_count(thin(n_samples(10), 0.0, rng)) == 0);
    CHECK(active_count(thin(n_samples(10), 0.5, rng)) == 5);
    CHECK(active_count(thin(n_samples(5), 0.5, rng)) == 3);  // half away from zero
    CHECK_THROWS_AS(thin(n_samples(3), 1.5, rng), ParameterRangeError);
  }

  TEST_CASE("thin preserves order and is monotone in tau") {
    const auto base = n_samples(57);
    std::size_t prev = 0;
    for (int k = 0; k <= 20; ++k) {
      Rng rng(12);
      const auto t = thin(base, k / 20.0, rng);
      REQUIRE(t.size() == base.size());
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].position == base[i].position);
      CHECK(active_count(t) >= prev);
      prev = active_count(t);
      const auto kept = active_only(t);
      CHECK(std::is_sorted(kept.begin(), kept.end(),
                           [](const Sample& a, const Sample& b) { return a.position.x < b.position.x; }));
    }
  }

  TEST_CASE("separation grid agrees with brute force") {
    Rng rng(21);
    SeparationGrid grid(4.0);
    std::vector<Sample> accepted;
    for (int i = 0; i < 2000; ++i) {
      const Sample s{{rng.uniform(0, 50), rng.uniform(0, 50)}, rng.uniform(0.2, 4.0), true};
      bool brute = true;
      for (const Sample& a : accepted) brute = brute && separated(a, s);
      CHECK(grid.accepts(s) == brute);
      if (brute) {
        grid.insert(s);
        accepted.push_back(s);
      }
    }
  }
}
