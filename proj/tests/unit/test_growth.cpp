#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "urbanveg/errors.hpp"
#include "urbanveg/growth/arena.hpp"
#include "urbanveg/growth/grow.hpp"

using namespace urbanveg;
using namespace urbanveg::growth;
using geometry::rectangle;

namespace {

geometry::Lot open_lot(double w, double h) {
  geometry::Lot l;
  l.id = "g";
  l.boundary = rectangle(-w / 2, -h / 2, w / 2, h / 2);
  return l;
}

ppm::PlantSeed seed_at(double x, double y, int species, double age, double prune = 1.0) {
  ppm::PlantSeed s;
  s.position = {x, y};
  s.species = species;
  s.age = age;
  s.prune_factor = prune;
  return s;
}

TreeSkeleton chain(int n) {
  TreeSkeleton t;
  for (int i = 0; i < n; ++i) t.nodes.push_back({{0, 0, double(i)}, 0.0, i - 1});
  return t;
}

std::size_t edge_count(const TreeSkeleton& t) {
  return static_cast<std::size_t>(
      std::count_if(t.nodes.begin(), t.nodes.end(), [](const SkeletonNode& n) { return n.parent >= 0; }));
}

const SpeciesMap& library() {
  static const SpeciesMap m = species_map(default_species_library());
  return m;
}

}  // namespace

TEST_SUITE("growth") {
  TEST_CASE("scatter_attractors counts") {
    const Box3 box{{0, 0, 0}, {10, 10, 10}};
    Rng rng(1);
    const auto pts = scatter_attractors(box, {}, 0.1, rng);
    CHECK(std::abs(static_cast<double>(pts.size()) - 100.0) <= 30.0);
    for (const Vec3& p : pts) CHECK(box.contains(p));

    const Obstacle full{rectangle(-1, -1, 11, 11), 12.0};
    Rng rng2(1);
    CHECK(scatter_attractors(box, {full}, 0.1, rng2).empty());

    Rng a(5), b(5);
    CHECK(scatter_attractors(box, {}, 0.3, a) == scatter_attractors(box, {}, 0.3, b));
    CHECK_THROWS_AS(scatter_attractors(box, {}, 0.0, a), ParameterRangeError);
  }

  TEST_CASE("thicken closed forms") {
    TreeSkeleton t;
    t.nodes = {{{0, 0, 0}, 0, -1}, {{0, 0, 1}, 0, 0}, {{1, 0, 1}, 0, 0}};
    t = thicken(t, 1.0);
    CHECK(t.nodes[0].radius == doctest::Approx(std::sqrt(2.0)));

    const TreeSkeleton c = thicken(chain(6), 0.03);
    for (const auto& n : c.nodes) CHECK(n.radius == doctest::Approx(0.03));

    // Children radii 1, 2, 2: leaves 1 and two 2-chains built from four leaves.
    TreeSkeleton u;
    u.nodes = {{{0, 0, 0}, 0, -1}, {{0, 0, 1}, 0, 0}, {{1, 0, 1}, 0, 0}, {{-1, 0, 1}, 0, 0}};
    for (int k : {2, 3})
      for (int j = 0; j < 4; ++j) u.nodes.push_back({{double(k), double(j), 2}, 0, k});
    u = thicken(u, 1.0);
    CHECK(u.nodes[1].radius == doctest::Approx(1.0));
    CHECK(u.nodes[2].radius == doctest::Approx(2.0));
    CHECK(u.nodes[3].radius == doctest::Approx(2.0));
    CHECK(u.nodes[0].radius == doctest::Approx(3.0));
    CHECK(da_vinci_residual(u) <= 1e-9);
  }

  TEST_CASE("validate rejects malformed skeletons") {
    CHECK_NOTHROW(validate(chain(3)));
    TreeSkeleton bad = chain(3);
    bad.nodes[1].parent = 2;
    CHECK_THROWS_AS(validate(bad), ValidationError);
    TreeSkeleton two_roots = chain(3);
    two_roots.nodes[2].parent = -1;
    CHECK_THROWS_AS(validate(two_roots), ValidationError);
  }

  TEST_CASE("single seed height bound") {
    for (int species : {0, 3, 5, 7}) {
      for (double age : {3.0, 8.0, 25.0}) {
        Rng rng(derive_seed(17, std::to_string(species)));
        const auto seeds = {seed_at(0, 0, species, age)};
        const auto r = grow_lot(open_lot(30, 30), seeds, library(), rng);
        const SpeciesPreset& sp = library().at(species);
        const double bound = std::min(sp.max_height, std::floor(age) * sp.internode_length);
        const double h = r.trees[0].height();
        CHECK_MESSAGE(h <= bound + 1e-9, species, " ", age);
        CHECK_MESSAGE(h >= 0.5 * bound, species, " ", age);
      }
    }
  }

  TEST_CASE("two seeds 1 m apart keep kill distance") {
    Rng rng(3);
    const std::vector<ppm::PlantSeed> seeds{seed_at(0, 0, 4, 12), seed_at(1, 0, 4, 12)};
    const auto r = grow_lot(open_lot(20, 20), seeds, library(), rng);
    const double kill = library().at(4).kill_radius;
    const auto& a = r.trees[0].nodes;
    const auto& b = r.trees[1].nodes;
    CHECK(a.size() > 3);
    CHECK(b.size() > 3);
    for (const auto& p : a)
      for (const auto& q : b) CHECK(std::sqrt(distance_sq(p.position, q.position)) >= kill - 1e-12);
  }

  TEST_CASE("seed beside a wall never enters the building") {
    geometry::Lot lot = open_lot(30, 30);
    lot.buildings.push_back({rectangle(1, -5, 9, 5), 8.0, {}});
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng(s);
      const auto r = grow_lot(lot, {seed_at(0.2, 0, 0, 20)}, library(), rng);
      const auto obstacles = obstacles_of(lot);
      for (const auto& n : r.trees[0].nodes)
        for (const auto& o : obstacles) CHECK_FALSE(o.contains(n.position));
    }
  }

  TEST_CASE("grown trees: structure, conservation, determinism") {
    const std::vector<ppm::PlantSeed> seeds{seed_at(-6, -4, 0, 15), seed_at(5, 3, 2, 10, 0.7),
                                            seed_at(0, 8, 6, 6), seed_at(8, -7, 9, 9, 0.5)};
    Rng a(11), b(11);
    GrowthOptions opt;
    opt.attractor_density = 0.2;
    const auto ra = grow_lot(open_lot(40, 40), seeds, library(), a, opt);
    const auto rb = grow_lot(open_lot(40, 40), seeds, library(), b, opt);
    REQUIRE(ra.trees.size() == seeds.size());
    for (std::size_t i = 0; i < ra.trees.size(); ++i) {
      const auto& t = ra.trees[i];
      CHECK_NOTHROW(validate(t));
      CHECK(t.nodes.size() == edge_count(t) + 1);
      CHECK(da_vinci_residual(t) <= 1e-9);
      CHECK(t.nodes == rb.trees[i].nodes);
      CHECK(t.seed == seeds[i]);
    }
  }

  TEST_CASE("pruning") {
    Rng rng(21);
    GrowthArena arena = make_arena(open_lot(30, 30), 20.0, 0.3, rng);
    const auto grown = grow({seed_at(0, 0, 0, 14)}, library(), arena);
    const TreeSkeleton& t = grown.trees[0];
    REQUIRE(t.nodes.size() > 10);

    const PruneResult keep = prune_crown(t, 1.0);
    CHECK(keep.skeleton.nodes == t.nodes);

    const PruneResult none = prune_crown(t, 0.0);
    for (bool trunk : none.trunk) CHECK(trunk);
    const auto mask = trunk_mask(t);
    CHECK(none.skeleton.nodes.size() == static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true)));

    const PruneResult hedge = prune_crown(t, 0.7);
    REQUIRE(hedge.box.has_value());
    const Box3 full = *crown_box(t, mask);
    const Box3 expected = full.scaled(0.7);
    CHECK(hedge.box->min.x == doctest::Approx(expected.min.x));
    CHECK(hedge.box->max.z == doctest::Approx(expected.max.z));
    CHECK_NOTHROW(validate(hedge.skeleton));
    for (std::size_t i = 0; i < hedge.skeleton.nodes.size(); ++i)
      if (!hedge.trunk[i]) CHECK(hedge.box->contains(hedge.skeleton.nodes[i].position, 1e-9));
    CHECK(hedge.skeleton.nodes.size() < t.nodes.size());

    CHECK_THROWS_AS(prune_crown(t, 1.2), ParameterRangeError);
  }

  TEST_CASE("regrowth stays inside the pruned box") {
    Rng rng(22);
    GrowthArena arena = make_arena(open_lot(30, 30), 20.0, 0.3, rng);
    auto grown = grow({seed_at(0, 0, 1, 14)}, library(), arena);
    PruneResult pr = prune_crown(grown.trees[0], 0.6);
    const std::size_t before = pr.skeleton.nodes.size();
    grown.trees[0] = pr.skeleton;
    const auto re = regrow(grown, {pr.box}, library(), arena, 2);
    const auto& nodes = re.trees[0].nodes;
    CHECK(nodes.size() >= before);
    for (std::size_t i = before; i < nodes.size(); ++i) CHECK(pr.box->contains(nodes[i].position));
  }

  TEST_CASE("competition does not raise a tree's consumption") {
    int checked = 0;
    for (std::uint64_t s = 0; s < 8; ++s) {
      Rng rng(s);
      const GrowthArena field = make_arena(open_lot(30, 30), 20.0, 0.2, rng);
      GrowthArena alone = field;
      GrowthArena shared = field;
      const auto a = grow({seed_at(0, 0, 0, 12)}, library(), alone);
      const auto b = grow({seed_at(0, 0, 0, 12), seed_at(3.0, 0, 1, 12)}, library(), shared);
      CHECK_MESSAGE(b.consumed[0] <= a.consumed[0], "seed ", s);
      ++checked;
    }
    CHECK(checked == 8);
  }

  TEST_CASE("unknown species") {
    Rng rng(0);
    CHECK_THROWS_AS(grow_lot(open_lot(10, 10), {seed_at(0, 0, 42, 5)}, library(), rng), ConfigError);
  }
}
