#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "urbanveg/growth/skeleton.hpp"
#include "urbanveg/io/json_common.hpp"

namespace urbanveg::io {

struct LotSkeleton {
  std::string lot_id;
  growth::TreeSkeleton tree;
};

/// {"engine_version", "trees": [{lot_id, species, age, prune_factor,
/// position: [x, y], nodes: [{x, y, z, radius, parent}]}]}
json skeletons_to_json(const std::vector<LotSkeleton>& trees);
std::string export_skeletons(const std::vector<LotSkeleton>& trees);
std::vector<LotSkeleton> load_skeletons(std::string_view bytes);

/// Wavefront OBJ line set: one vertex per node, one line per parent link,
/// one object per tree.
std::string export_obj(const std::vector<LotSkeleton>& trees);

}  // namespace urbanveg::io
