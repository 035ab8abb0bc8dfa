#include "urbanveg/app/pipeline.hpp"

#include <algorithm>
#include <set>

#include "urbanveg/coverage/placement.hpp"
#include "urbanveg/coverage/polygonize.hpp"
#include "urbanveg/errors.hpp"
#include "urbanveg/metrics/chamfer.hpp"
#include "urbanveg/ppm/context.hpp"
#include "urbanveg/ppm/strategies.hpp"

namespace urbanveg::app {

std::vector<ppm::PlantSeed> place_lot(const geometry::Lot& lot, const ppm::PPM& model,
                                      const std::vector<growth::SpeciesPreset>& species,
                                      const geometry::EnvelopeOffsets& envelope, std::uint64_t seed) {
  Rng rng(derive_seed(seed, lot.id));
  ppm::PlaceOptions options;
  options.envelope = envelope;
  const std::vector<sampling::Sample> samples = ppm::place(model, lot, rng, options);
  return ppm::assign_structure(samples, model.structural, species, rng);
}

std::vector<ppm::PlantSeed> place_lot_from_coverage(const geometry::Lot& lot, const coverage::CoverageMap& map,
                                                    double threshold, const ppm::PPM& model,
                                                    const std::vector<growth::SpeciesPreset>& species,
                                                    const geometry::EnvelopeOffsets& envelope, std::uint64_t seed) {
  Rng rng(derive_seed(seed, lot.id));
  const std::vector<geometry::Polygon2D> regions = coverage::polygonize(map, lot, threshold);
  return coverage::place_from_coverage(lot, regions, model.positional, model.structural, species, rng, envelope);
}

io::PlacementExport place_layout(const io::LayoutDocument& layout, const io::EngineConfig& config,
                                 const PlaceRequest& request) {
  std::map<std::string, ppm::PPM> models;
  for (const geometry::Lot& lot : layout.lots) models[lot.id] = io::model_for(lot, config, &layout);
  if (request.context_xi) {
    const double xi = *request.context_xi;
    if (!(xi >= 0.0 && xi <= 300.0)) throw ParameterRangeError("context_xi", xi, 0.0, 300.0);
    models = ppm::diffuse_layout(layout.lots, models, xi, 1);
  }
  io::SeedsByLot seeds;
  for (const geometry::Lot& lot : layout.lots) {
    const ppm::PPM& m = models.at(lot.id);
    seeds[lot.id] = request.coverage
                        ? place_lot_from_coverage(lot, *request.coverage, request.threshold, m, config.species,
                                                  config.envelope, request.seed)
                        : place_lot(lot, m, config.species, config.envelope, request.seed);
  }
  return io::make_export(seeds, request.seed);
}

geometry::Lot open_lot(const std::string& id, const std::vector<ppm::PlantSeed>& seeds,
                       const std::vector<geometry::Polygon2D>& buildings) {
  geometry::Bbox bb{{0.0, 0.0}, {0.0, 0.0}};
  bool first = true;
  auto grow_box = [&](geometry::Vec2 p) {
    if (first) {
      bb = {p, p};
      first = false;
      return;
    }
    bb.min = {std::min(bb.min.x, p.x), std::min(bb.min.y, p.y)};
    bb.max = {std::max(bb.max.x, p.x), std::max(bb.max.y, p.y)};
  };
  for (const ppm::PlantSeed& s : seeds) grow_box(s.position);
  for (const geometry::Polygon2D& b : buildings)
    for (geometry::Vec2 p : b.outer) grow_box(p);
  constexpr double kMargin = 5.0;
  geometry::Lot lot;
  lot.id = id;
  lot.boundary = geometry::rectangle(bb.min.x - kMargin, bb.min.y - kMargin, bb.max.x + kMargin, bb.max.y + kMargin);
  for (const geometry::Polygon2D& b : buildings) lot.buildings.push_back({geometry::oriented(b), std::nullopt, {}});
  return lot;
}

std::vector<io::LotSkeleton> grow_placement(const io::PlacementExport& placement, const io::LayoutDocument* layout,
                                            const std::vector<growth::SpeciesPreset>& species,
                                            const growth::GrowthOptions& options, std::uint64_t seed) {
  const growth::SpeciesMap map = growth::species_map(species);
  std::vector<io::LotSkeleton> out;
  for (const auto& [lot_id, seeds] : io::seeds_by_lot(placement)) {
    const geometry::Lot* found = layout ? layout->find(lot_id) : nullptr;
    const geometry::Lot lot = found ? *found : open_lot(lot_id, seeds);
    Rng rng(derive_seed(seed, "grow:" + lot_id));
    growth::GrowthResult r = growth::grow_lot(lot, seeds, map, rng, options);
    for (growth::TreeSkeleton& t : r.trees) out.push_back({lot_id, std::move(t)});
  }
  return out;
}

io::json evaluate(const io::PlacementExport& a, const io::PlacementExport& b, const io::LayoutDocument* layout) {
  std::map<std::string, std::vector<geometry::Vec2>> pa;
  std::map<std::string, std::vector<geometry::Vec2>> pb;
  for (const io::PlacementRecord& r : a.records) pa[r.lot_id].push_back({r.x, r.y});
  for (const io::PlacementRecord& r : b.records) pb[r.lot_id].push_back({r.x, r.y});
  std::set<std::string> ids;
  for (const auto& kv : pa) ids.insert(kv.first);
  for (const auto& kv : pb) ids.insert(kv.first);

  io::json lots = io::json::array();
  io::json skipped = io::json::array();
  double sum = 0.0;
  int compared = 0;
  for (const std::string& id : ids) {
    const auto& xa = pa[id];
    const auto& xb = pb[id];
    if (xa.empty() || xb.empty()) {
      skipped.push_back(id);
      continue;
    }
    geometry::Bbox frame;
    const geometry::Lot* lot = layout ? layout->find(id) : nullptr;
    if (lot) {
      frame = geometry::bbox(lot->boundary);
    } else {
      std::vector<geometry::Vec2> all = xa;
      all.insert(all.end(), xb.begin(), xb.end());
      frame = geometry::bbox(geometry::Ring(all));
    }
    const double cd = metrics::chamfer(metrics::normalize(xa, frame), metrics::normalize(xb, frame));
    lots.push_back({{"lot_id", id}, {"chamfer", cd}, {"count_a", xa.size()}, {"count_b", xb.size()}});
    sum += cd;
    ++compared;
  }
  io::json report = {{"lots", lots}, {"lots_compared", compared}, {"skipped", skipped}};
  report["mean_chamfer"] = compared > 0 ? io::json(sum / compared) : io::json(nullptr);
  return report;
}

io::json polygonize_layout(const coverage::CoverageMap& map, const io::LayoutDocument& layout, double threshold) {
  io::json features = io::json::array();
  for (const geometry::Lot& lot : layout.lots) {
    for (const geometry::Polygon2D& p : coverage::polygonize(map, lot, threshold)) {
      features.push_back({{"type", "Feature"},
                          {"properties", {{"role", "vegetation"}, {"parent_lot", lot.id}, {"area", geometry::area(p)}}},
                          {"geometry", {{"type", "Polygon"}, {"coordinates", io::polygon_coords(p)}}}});
    }
  }
  return {{"type", "FeatureCollection"}, {"threshold", threshold}, {"features", features}};
}

}  // namespace urbanveg::app
