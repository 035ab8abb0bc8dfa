#pragma once

#include <cmath>
#include <unordered_map>
#include <vector>

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/rng.hpp"

namespace urbanveg::sampling {

using geometry::Region;
using geometry::Vec2;

/// Normal law of plant envelope radii, N(mu, sigma) truncated to (0.1 mu, 10 mu).
struct RadiusModel {
  double mu = 3.0;     ///< mean radius, meters
  double sigma = 0.0;  ///< standard deviation, meters

  /// Throws ParameterRangeError unless mu in [1, 10] and sigma in [0, 2].
  void validate() const;
  /// Draws one radius. With sigma == 0 returns mu without consuming randomness.
  double draw(Rng& rng) const;
};

struct Sample {
  Vec2 position;
  double radius = 0.0;
  bool active = true;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct PoissonOptions {
  /// Consecutive rejected darts after which sampling stops.
  int max_consecutive_rejections = 300;
};

/// True iff |a - b| >= r(a) + r(b).
inline bool separated(const Sample& a, const Sample& b) {
  const double s = a.radius + b.radius;
  return geometry::distance_sq(a.position, b.position) >= s * s;
}

/// Variable-radii Poisson-disk sampling by dart throwing.
///
/// A dart y at a uniform position in `region` with radius r(y) drawn from
/// `model` is accepted iff |y - x| >= r(x) + r(y) for every accepted x.
/// Stops after `max_consecutive_rejections` consecutive rejections.
/// An empty region yields an empty list.
std::vector<Sample> poisson_variable_radii(const Region& region, const RadiusModel& model, Rng& rng,
                                           const PoissonOptions& options = {});

/// Keeps exactly round(tau * n) samples active, chosen by a seeded shuffle,
/// and deactivates the rest; order is preserved.
/// Throws ParameterRangeError for tau outside [0, 1].
std::vector<Sample> thin(std::vector<Sample> samples, double tau, Rng& rng);

/// Samples whose `active` flag is set.
std::vector<Sample> active_only(const std::vector<Sample>& samples);

/// Spatial hash over accepted samples for separation queries.
class SeparationGrid {
 public:
  explicit SeparationGrid(double cell_size);

  /// True iff `s` is separated from every sample inserted so far.
  bool accepts(const Sample& s) const;
  void insert(const Sample& s);

 private:
  static long long key(long long cx, long long cy) {
    return static_cast<long long>((static_cast<unsigned long long>(cx) << 32) ^
                                  (static_cast<unsigned long long>(cy) & 0xffffffffULL));
  }
  long long cell_of(double v) const { return static_cast<long long>(std::floor(v / cell_)); }

  double cell_;
  double max_radius_ = 0.0;
  std::vector<Sample> samples_;
  std::unordered_map<long long, std::vector<std::size_t>> buckets_;
};

}  // namespace urbanveg::sampling
