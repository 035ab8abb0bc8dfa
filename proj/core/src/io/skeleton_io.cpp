#include "urbanveg/io/skeleton_io.hpp"

#include <cstdio>

#include "urbanveg/errors.hpp"
#include "urbanveg/io/placement_io.hpp"

namespace urbanveg::io {

json skeletons_to_json(const std::vector<LotSkeleton>& trees) {
  json arr = json::array();
  for (const LotSkeleton& t : trees) {
    json nodes = json::array();
    for (const growth::SkeletonNode& n : t.tree.nodes)
      nodes.push_back({{"x", n.position.x}, {"y", n.position.y}, {"z", n.position.z}, {"radius", n.radius},
                       {"parent", n.parent}});
    const ppm::PlantSeed& s = t.tree.seed;
    arr.push_back({{"lot_id", t.lot_id},
                   {"species", s.species},
                   {"age", s.age},
                   {"prune_factor", s.prune_factor},
                   {"radius", s.radius},
                   {"position", {s.position.x, s.position.y}},
                   {"nodes", nodes}});
  }
  return {{"engine_version", kEngineVersion}, {"trees", arr}};
}

std::string export_skeletons(const std::vector<LotSkeleton>& trees) { return skeletons_to_json(trees).dump(2) + "\n"; }

std::vector<LotSkeleton> load_skeletons(std::string_view bytes) {
  const json j = parse_json(bytes, "skeletons");
  const json& trees = require(j, "trees", "");
  if (!trees.is_array()) throw ValidationError("trees", "trees must be an array");
  std::vector<LotSkeleton> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string p = "trees[" + std::to_string(i) + "]";
    const json& t = trees[i];
    LotSkeleton ls;
    ls.lot_id = require_string(t, "lot_id", p);
    ls.tree.seed.species = static_cast<int>(as_integer(require(t, "species", p), p + ".species"));
    ls.tree.seed.age = require_number(t, "age", p);
    ls.tree.seed.prune_factor = require_number(t, "prune_factor", p);
    ls.tree.seed.radius = t.contains("radius") ? require_number(t, "radius", p) : 0.0;
    ls.tree.seed.position = parse_point(require(t, "position", p), p + ".position");
    const json& nodes = require(t, "nodes", p);
    if (!nodes.is_array()) throw ValidationError(p + ".nodes", "nodes must be an array");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::string np = p + ".nodes[" + std::to_string(k) + "]";
      growth::SkeletonNode n;
      n.position = {require_number(nodes[k], "x", np), require_number(nodes[k], "y", np),
                    require_number(nodes[k], "z", np)};
      n.radius = require_number(nodes[k], "radius", np);
      n.parent = static_cast<int>(as_integer(require(nodes[k], "parent", np), np + ".parent"));
      ls.tree.nodes.push_back(n);
    }
    growth::validate(ls.tree);
    out.push_back(std::move(ls));
  }
  return out;
}

std::string export_obj(const std::vector<LotSkeleton>& trees) {
  std::string out = "# urbanveg skeletons\n";
  char buf[128];
  std::size_t base = 1;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    out += "o " + trees[t].lot_id + "_" + std::to_string(t) + "\n";
    const auto& nodes = trees[t].tree.nodes;
    for (const growth::SkeletonNode& n : nodes) {
      std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", n.position.x, n.position.y, n.position.z);
      out += buf;
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].parent < 0) continue;
      std::snprintf(buf, sizeof buf, "l %zu %zu\n", base + static_cast<std::size_t>(nodes[i].parent), base + i);
      out += buf;
    }
    base += nodes.size();
  }
  return out;
}

}  // namespace urbanveg::io
