#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "urbanveg/io/json_common.hpp"
#include "urbanveg/ppm/structure.hpp"

namespace urbanveg::io {

inline constexpr std::string_view kEngineVersion = URBANVEG_VERSION;

struct PlacementRecord {
  std::string lot_id;
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
  int species = 0;
  double age = 0.0;
  double prune_factor = 1.0;

  friend bool operator==(const PlacementRecord&, const PlacementRecord&) = default;
};

struct PlacementExport {
  std::string engine_version{kEngineVersion};
  std::uint64_t seed = 0;
  std::vector<PlacementRecord> records;
};

using SeedsByLot = std::map<std::string, std::vector<ppm::PlantSeed>>;

/// Records sorted by lot id, then x, then y.
PlacementExport make_export(const SeedsByLot& seeds, std::uint64_t seed);
void sort_records(std::vector<PlacementRecord>& records);

json placement_to_json(const PlacementExport& e);
std::string dump_placement(const PlacementExport& e);
PlacementExport placement_from_json(const json& j);
PlacementExport load_placement(std::string_view bytes);

SeedsByLot seeds_by_lot(const PlacementExport& e);
json record_to_json(const PlacementRecord& r);

}  // namespace urbanveg::io
