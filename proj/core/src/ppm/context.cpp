#include "urbanveg/ppm/context.hpp"

#include <algorithm>
#include <cmath>

#include "urbanveg/errors.hpp"

namespace urbanveg::ppm {

double context_weight(double d, double xi) {
  if (d > xi) return 0.0;
  if (xi <= 0.0) return d <= 0.0 ? 1.0 : 0.0;
  const double s = xi / 3.0;
  return std::exp(-(d * d) / (2.0 * s * s));
}

ParamVector blend(const std::string& self_id, const ParamVector& self, const LotContext& context, double xi) {
  if (!(xi >= 0.0)) throw ParameterRangeError("xi", xi, 0.0, 300.0);
  struct Term {
    const std::string* id;
    double w;
    const ParamVector* v;
  };
  std::vector<Term> terms;
  terms.push_back({&self_id, 1.0, &self});
  for (const Neighbor& n : context.neighbors) {
    const double w = context_weight(geometry::distance(context.center, n.center), xi);
    if (w > 0.0) terms.push_back({&n.id, w, &n.values});
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return *a.id < *b.id; });

  ParamVector out{};
  double total = 0.0;
  for (const Term& t : terms) total += t.w;
  // Offsets from the lot's own value, so identical inputs come back bit-exact.
  for (std::size_t i = 0; i < kParamCount; ++i) {
    double acc = 0.0;
    for (const Term& t : terms) acc += t.w * ((*t.v)[i] - self[i]);
    out[i] = self[i] + acc / total;
  }
  return out;
}

PPM context_update(const PPM& ppm, const LotContext& context, double xi) {
  const ParamVector v = blend(context.id, to_vector(ppm.positional, ppm.structural), context, xi);
  PPM out = ppm;
  from_vector(v, out.positional, out.structural);
  return out;
}

LotContext context_of(const std::vector<LotParams>& lots, std::size_t index, double xi) {
  LotContext ctx{lots[index].id, lots[index].center, {}};
  for (std::size_t j = 0; j < lots.size(); ++j) {
    if (j == index) continue;
    if (geometry::distance(lots[j].center, ctx.center) <= xi)
      ctx.neighbors.push_back({lots[j].id, lots[j].center, lots[j].values});
  }
  return ctx;
}

std::vector<LotParams> diffuse(const std::vector<LotParams>& lots, double xi) {
  std::vector<LotParams> snapshot = lots;
  std::sort(snapshot.begin(), snapshot.end(), [](const LotParams& a, const LotParams& b) { return a.id < b.id; });
  std::vector<LotParams> out(snapshot.size());
  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    out[i] = snapshot[i];
    out[i].values = blend(snapshot[i].id, snapshot[i].values, context_of(snapshot, i, xi), xi);
  }
  return out;
}

std::map<std::string, PPM> diffuse_layout(const std::vector<geometry::Lot>& lots,
                                          const std::map<std::string, PPM>& models, double xi, int iterations) {
  std::vector<LotParams> state;
  for (const geometry::Lot& lot : lots) {
    const auto it = models.find(lot.id);
    if (it == models.end()) throw ConfigError("lots", "no placement model for lot '" + lot.id + "'");
    state.push_back({lot.id, geometry::centroid(geometry::oriented(lot.boundary)),
                     to_vector(it->second.positional, it->second.structural)});
  }
  for (int k = 0; k < iterations; ++k) state = diffuse(state, xi);
  std::map<std::string, PPM> out;
  for (const LotParams& lp : state) {
    PPM m = models.at(lp.id);
    from_vector(lp.values, m.positional, m.structural);
    out.emplace(lp.id, m);
  }
  return out;
}

}  // namespace urbanveg::ppm
