#include "urbanveg/ppm/strategies.hpp"

#include <cmath>
#include <numbers>

#include "urbanveg/errors.hpp"
#include "urbanveg/geometry/lattice.hpp"
#include "urbanveg/geometry/medial_axis.hpp"

namespace urbanveg::ppm {

using geometry::Vec2;

Region placement_region(const Lot& lot, const geometry::EnvelopeOffsets& offsets) {
  const Region plantable = geometry::plantable_region(lot);
  if (plantable.empty()) return {};
  const Region envelope = geometry::building_envelope(lot, offsets);
  if (envelope.empty()) return plantable;
  return geometry::subtract(plantable, envelope);
}

std::vector<Sample> strategy_random(const Region& region, const PositionalParams& p, Rng& rng,
                                    const sampling::PoissonOptions& options) {
  return sampling::poisson_variable_radii(region, p.radius_model(), rng, options);
}

std::vector<Sample> strategy_boundary(const Region& region, const Polygon2D& outline, const PositionalParams& p,
                                      Rng& rng, const sampling::PoissonOptions& options) {
  if (region.empty()) return {};
  const Region band = geometry::boundary_band(outline, p.beta);
  if (band.empty()) return {};
  return sampling::poisson_variable_radii(geometry::intersect(band, region), p.radius_model(), rng, options);
}

std::vector<Sample> strategy_cluster(const Region& region, const PositionalParams& p, Rng& rng,
                                     const sampling::PoissonOptions& options) {
  if (p.pi_max < 0) throw ParameterRangeError("pi", p.pi_max, 0, 5);
  if (region.empty() || p.pi_max == 0) return {};
  const int k = rng.uniform_int(1, p.pi_max);
  Region disks;
  for (int i = 0; i < k; ++i) {
    const Vec2 c = geometry::random_point_in(region, rng);
    disks = geometry::unite(disks, {geometry::circle_polygon(c, p.kappa)});
  }
  return sampling::poisson_variable_radii(geometry::intersect(disks, region), p.radius_model(), rng, options);
}

std::vector<Sample> strategy_equidistant(const Region& region, const PositionalParams& p, Rng& rng) {
  if (!(p.delta > 0.0)) throw ParameterRangeError("delta", "delta must be > 0");
  const sampling::RadiusModel model = p.radius_model();
  sampling::SeparationGrid grid(2.0 * (model.mu + 3.0 * model.sigma));
  std::vector<Sample> out;
  for (const Polygon2D& part : region) {
    const geometry::AxisGraph axis = geometry::medial_axis(part);
    for (Vec2 q : geometry::equidistant_along(axis, p.delta)) {
      Sample s{q, model.draw(rng), true};
      if (!grid.accepts(s)) continue;
      grid.insert(s);
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Sample> strategy_single(const Region& region, const PositionalParams& p, Rng& rng) {
  if (region.empty() || geometry::area(region) <= 0.0) return {};
  const Vec2 q = geometry::random_point_in(region, rng);
  return {Sample{q, p.radius_model().draw(rng), true}};
}

std::vector<Sample> strategy_regular(const Region& region, const PositionalParams& p, Rng& rng) {
  if (region.empty()) return {};
  const geometry::Lattice lattice = geometry::lattice_over(region, p.omega, p.eta);
  const sampling::RadiusModel model = p.radius_model();
  const double half = p.psi * p.omega / 2.0;
  std::vector<Sample> out;
  for (Vec2 c : lattice.local_centers) {
    if (!geometry::contains(region, lattice.to_world(c))) continue;
    const double dx = rng.uniform(-half, half);
    const double dy = rng.uniform(-half, half);
    const Vec2 q = lattice.to_world(c + Vec2{dx, dy});
    const double r = model.draw(rng);
    if (geometry::contains(region, q)) out.push_back({q, r, true});
  }
  return out;
}

std::vector<Sample> generate(Strategy s, const Region& region, const Polygon2D& outline, const PositionalParams& p,
                             Rng& rng, const sampling::PoissonOptions& options) {
  switch (s) {
    case Strategy::kRandom: return strategy_random(region, p, rng, options);
    case Strategy::kBoundary: return strategy_boundary(region, outline, p, rng, options);
    case Strategy::kCluster: return strategy_cluster(region, p, rng, options);
    case Strategy::kEquidistant: return strategy_equidistant(region, p, rng);
    case Strategy::kSingle: return strategy_single(region, p, rng);
    case Strategy::kRegular: return strategy_regular(region, p, rng);
  }
  return {};
}

std::vector<Sample> place(const PPM& ppm, const Lot& lot, const LotContext& context, Rng& rng,
                          const PlaceOptions& options) {
  geometry::validate(lot);
  const PPM model = context.neighbors.empty() ? ppm : context_update(ppm, context, ppm.positional.xi);
  model.validate();
  const Region region = placement_region(lot, options.envelope);
  std::vector<Sample> samples =
      generate(model.strategy, region, geometry::oriented(lot.boundary), model.positional, rng, options.poisson);
  return sampling::active_only(sampling::thin(std::move(samples), model.positional.tau, rng));
}

std::vector<Sample> place(const PPM& ppm, const Lot& lot, Rng& rng, const PlaceOptions& options) {
  return place(ppm, lot, LotContext{}, rng, options);
}

}  // namespace urbanveg::ppm
