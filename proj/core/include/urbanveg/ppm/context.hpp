#pragma once

#include <map>
#include <string>
#include <vector>

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/ppm/params.hpp"

namespace urbanveg::ppm {

struct Neighbor {
  std::string id;
  geometry::Vec2 center;
  ParamVector values{};
};

/// A lot's own identity and position plus the lots within radius xi.
struct LotContext {
  std::string id;
  geometry::Vec2 center;
  std::vector<Neighbor> neighbors;
};

/// Truncated Gaussian kernel: exp(-d²/(2s²)) with s = xi/3, zero beyond xi.
/// With xi = 0 only d = 0 has weight.
double context_weight(double d, double xi);

/// Weight-normalized blend of `self` with every neighbor within xi (self at
/// d = 0 always included). Contributions are summed in id order, so the
/// result does not depend on neighbor order.
ParamVector blend(const std::string& self_id, const ParamVector& self, const LotContext& context, double xi);

/// Context-updated copy of `ppm`; the strategy is kept, integer parameters
/// are rounded.
PPM context_update(const PPM& ppm, const LotContext& context, double xi);

struct LotParams {
  std::string id;
  geometry::Vec2 center;
  ParamVector values{};
};

/// Context of lot `index` among `lots`: every other lot with center distance <= xi.
LotContext context_of(const std::vector<LotParams>& lots, std::size_t index, double xi);

/// One diffusion step: every lot blended against the original snapshot.
/// Output is sorted by id, independent of input order.
std::vector<LotParams> diffuse(const std::vector<LotParams>& lots, double xi);

/// Lot centers (area centroid) paired with their models, diffused
/// `iterations` times. Integer parameters stay continuous between steps and
/// are rounded once at the end. Strategies are unchanged.
std::map<std::string, PPM> diffuse_layout(const std::vector<geometry::Lot>& lots,
                                          const std::map<std::string, PPM>& models, double xi,
                                          int iterations = 1);

}  // namespace urbanveg::ppm
