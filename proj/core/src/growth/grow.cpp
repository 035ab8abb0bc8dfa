#include "urbanveg/growth/grow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "urbanveg/errors.hpp"

namespace urbanveg::growth {

SpeciesMap species_map(const std::vector<SpeciesPreset>& library) {
  validate_library(library);
  SpeciesMap out;
  for (const SpeciesPreset& s : library) out.emplace(s.id, s);
  return out;
}

namespace {

constexpr Vec3 kUp{0.0, 0.0, 1.0};

Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  return n > 1e-12 ? v * (1.0 / n) : Vec3{};
}

struct CellKey {
  long long x, y, z;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(k.x));
    h = mix64(h ^ static_cast<std::uint64_t>(k.y));
    return static_cast<std::size_t>(mix64(h ^ static_cast<std::uint64_t>(k.z)));
  }
};

/// Uniform 3D hash of integer payloads.
template <typename T>
class Grid3 {
 public:
  explicit Grid3(double cell) : cell_(cell > 0.0 ? cell : 1.0) {}

  void insert(Vec3 p, T value) { cells_[key(p)].push_back(value); }

  /// Calls f on every payload in cells overlapping the cube of half-side r.
  template <typename F>
  void near(Vec3 p, double r, F&& f) const {
    const CellKey lo = key(p - Vec3{r, r, r});
    const CellKey hi = key(p + Vec3{r, r, r});
    for (long long x = lo.x; x <= hi.x; ++x)
      for (long long y = lo.y; y <= hi.y; ++y)
        for (long long z = lo.z; z <= hi.z; ++z) {
          const auto it = cells_.find({x, y, z});
          if (it == cells_.end()) continue;
          for (const T& v : it->second) f(v);
        }
  }

  void clear() { cells_.clear(); }

 private:
  CellKey key(Vec3 p) const {
    return {static_cast<long long>(std::floor(p.x / cell_)), static_cast<long long>(std::floor(p.y / cell_)),
            static_cast<long long>(std::floor(p.z / cell_))};
  }

  double cell_;
  std::unordered_map<CellKey, std::vector<T>, CellHash> cells_;
};

struct NodeRef {
  int tree;
  int node;
};

struct Tree {
  const SpeciesPreset* sp = nullptr;
  TreeSkeleton skel;
  std::vector<int> child_count;
  int leader = 0;
  int start = 0;
  bool grows = true;
  std::optional<Box3> limit;
  int consumed = 0;
};

struct Pull {
  Vec3 dir;
  int count = 0;
};

class Forest {
 public:
  Forest(GrowthArena& arena, const GrowthOptions& options, double max_perception, double max_kill)
      : arena_(arena),
        options_(options),
        max_perception_(max_perception),
        max_kill_(max_kill),
        tan_shadow_(std::tan(options.shadow_half_angle_deg * std::numbers::pi / 180.0)),
        nodes_(max_perception),
        attractors_(max_perception) {
    for (std::size_t i = 0; i < arena_.attractors.size(); ++i)
      if (!arena_.consumed[i]) attractors_.insert(arena_.attractors[i], static_cast<int>(i));
  }

  void add(Tree t) {
    const int id = static_cast<int>(trees_.size());
    t.child_count.assign(t.skel.nodes.size(), 0);
    for (const SkeletonNode& n : t.skel.nodes)
      if (n.parent >= 0) ++t.child_count[n.parent];
    for (std::size_t i = 0; i < t.skel.nodes.size(); ++i)
      nodes_.insert(t.skel.nodes[i].position, {id, static_cast<int>(i)});
    trees_.push_back(std::move(t));
  }

  void cycle(int c, bool regrowth) {
    std::vector<bool> active(trees_.size());
    for (std::size_t t = 0; t < trees_.size(); ++t) active[t] = trees_[t].grows && c >= trees_[t].start;
    const auto pulls = associate(active);
    for (std::size_t t = 0; t < trees_.size(); ++t)
      if (active[t]) extend(static_cast<int>(t), pulls[t], regrowth);
  }

  GrowthResult result() && {
    GrowthResult out;
    for (Tree& t : trees_) {
      out.trees.push_back(std::move(t.skel));
      out.consumed.push_back(t.consumed);
    }
    return out;
  }

 private:
  std::vector<std::vector<Pull>> associate(const std::vector<bool>& active) const {
    std::vector<std::vector<Pull>> pulls(trees_.size());
    for (std::size_t t = 0; t < trees_.size(); ++t)
      if (active[t]) pulls[t].assign(trees_[t].skel.nodes.size(), Pull{});

    const double reach = max_perception_ * std::sqrt(1.0 + tan_shadow_ * tan_shadow_);
    struct Best {
      int tree;
      int node;
      double d2;
    };
    std::vector<Best> best;
    std::vector<std::pair<int, double>> shade;  // tree, lowest node height above the attractor
    for (std::size_t i = 0; i < arena_.attractors.size(); ++i) {
      if (arena_.consumed[i]) continue;
      const Vec3 a = arena_.attractors[i];
      best.clear();
      shade.clear();
      nodes_.near(a, reach, [&](NodeRef r) {
        const Vec3 p = trees_[r.tree].skel.nodes[r.node].position;
        const Vec3 d = p - a;
        if (d.z > 0.0 && std::hypot(d.x, d.y) <= d.z * tan_shadow_) {
          auto it = std::find_if(shade.begin(), shade.end(), [&](auto& s) { return s.first == r.tree; });
          if (it == shade.end()) shade.emplace_back(r.tree, d.z);
          else it->second = std::min(it->second, d.z);
        }
        if (!active[r.tree]) return;
        const double p_r = trees_[r.tree].sp->perception_radius;
        const double d2 = dot(d, d);
        if (d2 > p_r * p_r) return;
        auto it = std::find_if(best.begin(), best.end(), [&](const Best& b) { return b.tree == r.tree; });
        if (it == best.end()) best.push_back({r.tree, r.node, d2});
        else if (d2 < it->d2 || (d2 == it->d2 && r.node < it->node)) *it = {r.tree, r.node, d2};
      });
      for (const Best& b : best) {
        const double depth = trees_[b.tree].sp->perception_radius;
        const bool shadowed = std::any_of(shade.begin(), shade.end(),
                                          [&](auto& s) { return s.first != b.tree && s.second <= depth; });
        if (shadowed) continue;
        Pull& pull = pulls[b.tree][b.node];
        pull.dir = pull.dir + normalized(a - trees_[b.tree].skel.nodes[b.node].position);
        ++pull.count;
      }
    }
    return pulls;
  }

  void extend(int t, const std::vector<Pull>& pulls, bool regrowth) {
    Tree& tree = trees_[t];
    const double bias = tree.sp->growth_bias_up;
    int budget = tree.sp->annual_bud_count;

    if (!regrowth) {
      const Pull& lp = pulls[tree.leader];
      const Vec3 dir =
          lp.count > 0 ? normalized(kUp * (1.0 + bias) + normalized(lp.dir) * (1.0 - bias)) : kUp;
      if (const int added = try_grow(t, tree.leader, dir); added >= 0) tree.leader = added;
      --budget;
    }

    std::vector<int> candidates;
    for (std::size_t i = 0; i < pulls.size(); ++i)
      if (pulls[i].count > 0 && (regrowth || static_cast<int>(i) != tree.leader)) candidates.push_back(static_cast<int>(i));
    auto priority = [&](int i) { return pulls[i].count * (tree.child_count[i] == 0 ? 2 : 1); };
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return priority(a) > priority(b); });

    for (int i : candidates) {
      if (budget <= 0) break;
      const Vec3 dir = normalized(normalized(pulls[i].dir) * (1.0 - bias) + kUp * bias);
      if (norm(dir) == 0.0) continue;
      if (try_grow(t, i, dir) >= 0) --budget;
    }
  }

  /// Appends a node one internode from `from` along `dir`; -1 if rejected.
  int try_grow(int t, int from, Vec3 dir) {
    Tree& tree = trees_[t];
    const SpeciesPreset& sp = *tree.sp;
    const Vec3 p = tree.skel.nodes[from].position + dir * sp.internode_length;
    if (p.z < 0.0 || p.z > sp.max_height) return -1;
    if (tree.limit && !tree.limit->contains(p)) return -1;
    if (arena_.blocked(p)) return -1;

    const double own = 0.25 * sp.internode_length;
    bool crowded = false;
    nodes_.near(p, std::max(max_kill_, own), [&](NodeRef r) {
      if (crowded) return;
      const double d2 = distance_sq(p, trees_[r.tree].skel.nodes[r.node].position);
      crowded = r.tree != t ? d2 < max_kill_ * max_kill_ : d2 < own * own;
    });
    if (crowded) return -1;

    const int idx = static_cast<int>(tree.skel.nodes.size());
    tree.skel.nodes.push_back({p, 0.0, from});
    tree.child_count.push_back(0);
    ++tree.child_count[from];
    nodes_.insert(p, {t, idx});

    const double k2 = sp.kill_radius * sp.kill_radius;
    attractors_.near(p, sp.kill_radius, [&](int a) {
      if (arena_.consumed[a] || distance_sq(p, arena_.attractors[a]) > k2) return;
      arena_.consumed[a] = true;
      ++tree.consumed;
    });
    return idx;
  }

  GrowthArena& arena_;
  const GrowthOptions& options_;
  double max_perception_;
  double max_kill_;
  double tan_shadow_;
  std::vector<Tree> trees_;
  Grid3<NodeRef> nodes_;
  Grid3<int> attractors_;
};

const SpeciesPreset& resolve(const SpeciesMap& species, int id) {
  const auto it = species.find(id);
  if (it == species.end()) throw ConfigError("species", "unknown species id " + std::to_string(id));
  return it->second;
}

std::pair<double, double> reach_of(const std::vector<const SpeciesPreset*>& used) {
  double p = 0.0;
  double k = 0.0;
  for (const SpeciesPreset* sp : used) {
    p = std::max(p, sp->perception_radius);
    k = std::max(k, sp->kill_radius);
  }
  return {p > 0.0 ? p : 1.0, k};
}

}  // namespace

GrowthResult grow(const std::vector<ppm::PlantSeed>& seeds, const SpeciesMap& species, GrowthArena& arena,
                  const GrowthOptions& options) {
  std::vector<const SpeciesPreset*> used;
  for (const ppm::PlantSeed& s : seeds) used.push_back(&resolve(species, s.species));
  if (arena.consumed.size() != arena.attractors.size()) arena.consumed.assign(arena.attractors.size(), false);

  double max_age = 0.0;
  for (const ppm::PlantSeed& s : seeds) max_age = std::max(max_age, s.age);
  const int years = options.years > 0 ? options.years : static_cast<int>(std::ceil(max_age - 1e-9));

  const auto [max_p, max_k] = reach_of(used);
  Forest forest(arena, options, max_p, max_k);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Tree t;
    t.sp = used[i];
    t.skel.seed = seeds[i];
    t.skel.nodes.push_back({{seeds[i].position.x, seeds[i].position.y, 0.0}, 0.0, -1});
    const int cycles = std::min(years, static_cast<int>(std::floor(seeds[i].age + 1e-9)));
    t.start = years - std::max(0, cycles);
    forest.add(std::move(t));
  }
  for (int c = 0; c < years; ++c) forest.cycle(c, false);
  return std::move(forest).result();
}

GrowthResult regrow(GrowthResult grown, const std::vector<std::optional<Box3>>& limits, const SpeciesMap& species,
                    GrowthArena& arena, int cycles, const GrowthOptions& options) {
  std::vector<const SpeciesPreset*> used;
  for (const TreeSkeleton& s : grown.trees) used.push_back(&resolve(species, s.seed.species));
  if (arena.consumed.size() != arena.attractors.size()) arena.consumed.assign(arena.attractors.size(), false);
  const auto [max_p, max_k] = reach_of(used);
  Forest forest(arena, options, max_p, max_k);
  for (std::size_t i = 0; i < grown.trees.size(); ++i) {
    Tree t;
    t.sp = used[i];
    t.skel = std::move(grown.trees[i]);
    t.limit = i < limits.size() ? limits[i] : std::nullopt;
    t.grows = t.limit.has_value();
    t.consumed = i < grown.consumed.size() ? grown.consumed[i] : 0;
    forest.add(std::move(t));
  }
  for (int c = 0; c < cycles; ++c) forest.cycle(c, true);
  return std::move(forest).result();
}

GrowthResult grow_lot(const std::vector<ppm::PlantSeed>& seeds, const SpeciesMap& species, GrowthArena& arena,
                      const GrowthOptions& options) {
  GrowthResult result = grow(seeds, species, arena, options);
  std::vector<std::optional<Box3>> limits(result.trees.size());
  bool any = false;
  for (std::size_t i = 0; i < result.trees.size(); ++i) {
    const double gamma = result.trees[i].seed.prune_factor;
    if (gamma >= 1.0) continue;
    PruneResult pr = prune_crown(result.trees[i], gamma);
    result.trees[i] = std::move(pr.skeleton);
    limits[i] = pr.box;
    any = any || pr.box.has_value();
  }
  if (any && options.regrowth_cycles > 0)
    result = regrow(std::move(result), limits, species, arena, options.regrowth_cycles, options);
  for (TreeSkeleton& t : result.trees) t = thicken(std::move(t), options.tip_radius);
  return result;
}

GrowthResult grow_lot(const geometry::Lot& lot, const std::vector<ppm::PlantSeed>& seeds, const SpeciesMap& species,
                      Rng& rng, const GrowthOptions& options) {
  double height = 1.0;
  for (const ppm::PlantSeed& s : seeds) height = std::max(height, resolve(species, s.species).max_height);
  GrowthArena arena = make_arena(lot, height, options.attractor_density, rng, options.default_building_height);
  return grow_lot(seeds, species, arena, options);
}

}  // namespace urbanveg::growth
