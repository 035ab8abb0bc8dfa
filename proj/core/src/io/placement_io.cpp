#include "urbanveg/io/placement_io.hpp"

#include <algorithm>
#include <tuple>

#include "urbanveg/errors.hpp"

namespace urbanveg::io {

void sort_records(std::vector<PlacementRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const PlacementRecord& a, const PlacementRecord& b) {
    return std::tie(a.lot_id, a.x, a.y) < std::tie(b.lot_id, b.x, b.y);
  });
}

PlacementExport make_export(const SeedsByLot& seeds, std::uint64_t seed) {
  PlacementExport e;
  e.seed = seed;
  for (const auto& [lot, list] : seeds)
    for (const ppm::PlantSeed& s : list)
      e.records.push_back({lot, s.position.x, s.position.y, s.radius, s.species, s.age, s.prune_factor});
  sort_records(e.records);
  return e;
}

json record_to_json(const PlacementRecord& r) {
  return {{"lot_id", r.lot_id}, {"x", r.x},     {"y", r.y}, {"radius", r.radius}, {"species", r.species},
          {"age", r.age},       {"prune_factor", r.prune_factor}};
}

json placement_to_json(const PlacementExport& e) {
  json records = json::array();
  for (const PlacementRecord& r : e.records) records.push_back(record_to_json(r));
  return {{"engine_version", e.engine_version}, {"seed", e.seed}, {"records", records}};
}

std::string dump_placement(const PlacementExport& e) { return placement_to_json(e).dump(2) + "\n"; }

PlacementExport placement_from_json(const json& j) {
  PlacementExport e;
  e.engine_version = require_string(j, "engine_version", "");
  const json& seed = require(j, "seed", "");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    throw ValidationError("seed", "seed must be a non-negative integer");
  e.seed = seed.get<std::uint64_t>();
  const json& records = require(j, "records", "");
  if (!records.is_array()) throw ValidationError("records", "records must be an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string p = "records[" + std::to_string(i) + "]";
    const json& r = records[i];
    PlacementRecord rec;
    rec.lot_id = require_string(r, "lot_id", p);
    rec.x = require_number(r, "x", p);
    rec.y = require_number(r, "y", p);
    rec.radius = require_number(r, "radius", p);
    rec.species = static_cast<int>(as_integer(require(r, "species", p), p + ".species"));
    rec.age = require_number(r, "age", p);
    rec.prune_factor = require_number(r, "prune_factor", p);
    e.records.push_back(std::move(rec));
  }
  return e;
}

PlacementExport load_placement(std::string_view bytes) { return placement_from_json(parse_json(bytes, "placement")); }

SeedsByLot seeds_by_lot(const PlacementExport& e) {
  SeedsByLot out;
  for (const PlacementRecord& r : e.records)
    out[r.lot_id].push_back({{r.x, r.y}, r.radius, r.age, r.species, r.prune_factor});
  return out;
}

}  // namespace urbanveg::io
