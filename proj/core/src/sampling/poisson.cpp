#include "urbanveg/sampling/poisson.hpp"

#include <algorithm>
#include <numeric>

#include "urbanveg/errors.hpp"
#include "urbanveg/geometry/polygon_ops.hpp"

namespace urbanveg::sampling {

void RadiusModel::validate() const {
  if (!(mu >= 1.0 && mu <= 10.0)) throw ParameterRangeError("mu", mu, 1.0, 10.0);
  if (!(sigma >= 0.0 && sigma <= 2.0)) throw ParameterRangeError("sigma", sigma, 0.0, 2.0);
}

double RadiusModel::draw(Rng& rng) const {
  if (sigma == 0.0) return mu;
  const double lo = 0.1 * mu;
  const double hi = 10.0 * mu;
  for (int i = 0; i < 1000; ++i) {
    const double r = rng.normal(mu, sigma);
    if (r > lo && r < hi) return r;
  }
  return mu;
}

SeparationGrid::SeparationGrid(double cell_size) : cell_(cell_size > 0.0 ? cell_size : 1.0) {}

bool SeparationGrid::accepts(const Sample& s) const {
  const double reach = s.radius + max_radius_;
  const long long x0 = cell_of(s.position.x - reach);
  const long long x1 = cell_of(s.position.x + reach);
  const long long y0 = cell_of(s.position.y - reach);
  const long long y1 = cell_of(s.position.y + reach);
  for (long long cx = x0; cx <= x1; ++cx) {
    for (long long cy = y0; cy <= y1; ++cy) {
      const auto it = buckets_.find(key(cx, cy));
      if (it == buckets_.end()) continue;
      for (std::size_t idx : it->second)
        if (!separated(s, samples_[idx])) return false;
    }
  }
  return true;
}

void SeparationGrid::insert(const Sample& s) {
  buckets_[key(cell_of(s.position.x), cell_of(s.position.y))].push_back(samples_.size());
  samples_.push_back(s);
  max_radius_ = std::max(max_radius_, s.radius);
}

std::vector<Sample> poisson_variable_radii(const Region& region, const RadiusModel& model, Rng& rng,
                                           const PoissonOptions& options) {
  std::vector<Sample> out;
  if (region.empty() || geometry::area(region) <= 0.0) return out;

  SeparationGrid grid(2.0 * (model.mu + 3.0 * model.sigma));
  int rejections = 0;
  while (rejections < options.max_consecutive_rejections) {
    Sample dart;
    try {
      dart.position = geometry::random_point_in(region, rng);
    } catch (const NoSampleError&) {
      break;
    }
    dart.radius = model.draw(rng);
    if (grid.accepts(dart)) {
      grid.insert(dart);
      out.push_back(dart);
      rejections = 0;
    } else {
      ++rejections;
    }
  }
  return out;
}

std::vector<Sample> thin(std::vector<Sample> samples, double tau, Rng& rng) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw ParameterRangeError("tau", tau, 0.0, 1.0);
  const std::size_t n = samples.size();
  const auto keep = static_cast<std::size_t>(round_half_away(tau * static_cast<double>(n)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));
  for (Sample& s : samples) s.active = false;
  for (std::size_t i = 0; i < keep && i < n; ++i) samples[order[i]].active = true;
  return samples;
}

std::vector<Sample> active_only(const std::vector<Sample>& samples) {
  std::vector<Sample> out;
  std::copy_if(samples.begin(), samples.end(), std::back_inserter(out), [](const Sample& s) { return s.active; });
  return out;
}

}  // namespace urbanveg::sampling
