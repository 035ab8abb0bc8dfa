#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "urbanveg/geometry/polygon.hpp"
#include "urbanveg/sampling/poisson.hpp"

namespace urbanveg::ppm {

enum class Strategy { kRandom, kBoundary, kCluster, kEquidistant, kSingle, kRegular };

inline constexpr std::array<Strategy, 6> kAllStrategies = {Strategy::kRandom,      Strategy::kBoundary,
                                                           Strategy::kCluster,     Strategy::kEquidistant,
                                                           Strategy::kSingle,      Strategy::kRegular};

/// One-letter symbol: R, B, C, E, S, I.
char symbol(Strategy s);
/// Lower-case name: random, boundary, cluster, equidistant, single, regular.
std::string_view to_string(Strategy s);
/// Accepts either the name or the one-letter symbol (case-insensitive).
std::optional<Strategy> parse_strategy(std::string_view s);

/// Every tunable parameter, in a fixed order. Positional first.
enum class Param {
  kMu, kSigma, kTau, kBeta, kKappa, kPiMax, kOmega, kPsi, kEta, kDelta, kXi,
  kAlphaMax, kRho, kTheta, kGamma, kLambda,
};
inline constexpr std::size_t kParamCount = 16;
inline constexpr std::size_t kPositionalCount = 11;

struct ParamInfo {
  Param param;
  std::string_view name;  ///< JSON field name
  double lo;
  double hi;
  bool integer;
  std::string_view unit;
  std::string_view meaning;
};

const std::array<ParamInfo, kParamCount>& param_table();
const ParamInfo& info(Param p);

/// Whether `strategy` reads positional parameter `p`. Structural parameters
/// are used by every strategy.
bool uses(Strategy strategy, Param p);

struct PositionalParams {
  double mu = 3.13;     ///< tree envelope mean radius, m
  double sigma = 0.35;  ///< tree envelope standard deviation, m
  double tau = 1.0;     ///< vegetation density
  double beta = 4.0;    ///< boundary size, m
  double kappa = 10.0;  ///< cluster radius, m
  int pi_max = 3;       ///< max number of clusters
  double omega = 9.0;   ///< regular grid size, m
  double psi = 0.0;     ///< regular jitter
  double eta = 0.0;     ///< regular orientation, degrees
  double delta = 8.0;   ///< equidistant spacing, m
  double xi = 180.0;    ///< context radius, m

  sampling::RadiusModel radius_model() const { return {mu, sigma}; }
  /// Throws ParameterRangeError naming the first field outside its range.
  void validate() const;
  friend bool operator==(const PositionalParams&, const PositionalParams&) = default;
};

struct StructuralParams {
  double alpha_max = 20.0;  ///< max plant age, years
  double rho = 0.5;         ///< tree vs shrub ratio
  double theta = 0.3;       ///< species diversity
  double gamma = 1.0;       ///< pruning factor
  int lambda = 4;           ///< number of species

  void validate() const;
  friend bool operator==(const StructuralParams&, const StructuralParams&) = default;
};

/// Procedural placement model: a strategy and its two parameter sets.
struct PPM {
  Strategy strategy = Strategy::kRandom;
  PositionalParams positional;
  StructuralParams structural;

  void validate() const {
    positional.validate();
    structural.validate();
  }
  friend bool operator==(const PPM&, const PPM&) = default;
};

/// Zone -> PPM assignment; every zone has an entry.
class ZoneProfile {
 public:
  /// Residential boundary, commercial regular, industrial cluster,
  /// street equidistant, other random.
  ZoneProfile();

  const PPM& at(geometry::Zone z) const { return models_.at(z); }
  void set(geometry::Zone z, PPM ppm) { models_[z] = std::move(ppm); }

 private:
  std::map<geometry::Zone, PPM> models_;
};

/// All sixteen parameters as doubles, in Param order. Used for diffusion,
/// where integer parameters must stay continuous between iterations.
using ParamVector = std::array<double, kParamCount>;

ParamVector to_vector(const PositionalParams& p, const StructuralParams& s);
/// Integer parameters are rounded half away from zero.
void from_vector(const ParamVector& v, PositionalParams& p, StructuralParams& s);

}  // namespace urbanveg::ppm
