#include "urbanveg/ppm/params.hpp"

#include <algorithm>
#include <cctype>

#include "urbanveg/errors.hpp"
#include "urbanveg/rng.hpp"

namespace urbanveg::ppm {

char symbol(Strategy s) {
  switch (s) {
    case Strategy::kRandom: return 'R';
    case Strategy::kBoundary: return 'B';
    case Strategy::kCluster: return 'C';
    case Strategy::kEquidistant: return 'E';
    case Strategy::kSingle: return 'S';
    case Strategy::kRegular: return 'I';
  }
  return '?';
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kRandom: return "random";
    case Strategy::kBoundary: return "boundary";
    case Strategy::kCluster: return "cluster";
    case Strategy::kEquidistant: return "equidistant";
    case Strategy::kSingle: return "single";
    case Strategy::kRegular: return "regular";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Strategy st : kAllStrategies) {
    if (lower == to_string(st)) return st;
    if (lower.size() == 1 && std::toupper(static_cast<unsigned char>(lower[0])) == symbol(st)) return st;
  }
  return std::nullopt;
}

const std::array<ParamInfo, kParamCount>& param_table() {
  // Sigma's lower bound is 0: sigma = 0 (fixed radii) is a valid configuration.
  static const std::array<ParamInfo, kParamCount> table = {{
      {Param::kMu, "mu", 1, 10, false, "m", "Tree envelope mean"},
      {Param::kSigma, "sigma", 0, 2, false, "m", "Tree envelope standard deviation"},
      {Param::kTau, "tau", 0, 1, false, "", "Vegetation density"},
      {Param::kBeta, "beta", 0, 5, false, "m", "Boundary size"},
      {Param::kKappa, "kappa", 1, 20, false, "m", "Cluster radius"},
      {Param::kPiMax, "pi", 0, 5, true, "", "Max number clusters"},
      {Param::kOmega, "omega", 5, 50, false, "m", "Regularity grid size"},
      {Param::kPsi, "psi", 0, 1, false, "", "Regularity jitter"},
      {Param::kEta, "eta", 0, 180, false, "deg", "Regularity orientation"},
      {Param::kDelta, "delta", 0, 10, false, "m", "Equidistant spacing"},
      {Param::kXi, "xi", 0, 300, false, "m", "Radius of context"},
      {Param::kAlphaMax, "alpha", 0, 100, false, "years", "Max plant age"},
      {Param::kRho, "rho", 0, 1, false, "", "Tree vs shrub ratio"},
      {Param::kTheta, "theta", 0, 1, false, "", "Species diversity"},
      {Param::kGamma, "gamma", 0, 1, false, "", "Pruning factor"},
      {Param::kLambda, "lambda", 1, 10, true, "", "Num. species"},
  }};
  return table;
}

const ParamInfo& info(Param p) { return param_table()[static_cast<std::size_t>(p)]; }

bool uses(Strategy strategy, Param p) {
  switch (p) {
    case Param::kMu:
    case Param::kSigma:
    case Param::kTau:
    case Param::kXi:
      return true;
    case Param::kBeta:
      return strategy == Strategy::kBoundary;
    case Param::kKappa:
    case Param::kPiMax:
      return strategy == Strategy::kCluster;
    case Param::kOmega:
    case Param::kPsi:
    case Param::kEta:
      return strategy == Strategy::kRegular;
    case Param::kDelta:
      return strategy == Strategy::kEquidistant;
    default:
      return true;  // structural
  }
}

namespace {

void check(Param p, double value, std::string_view prefix) {
  const ParamInfo& pi = info(p);
  const std::string field = std::string(prefix) + std::string(pi.name);
  if (!(value >= pi.lo && value <= pi.hi)) throw ParameterRangeError(field, value, pi.lo, pi.hi);
}

}  // namespace

void PositionalParams::validate() const {
  const ParamVector v = to_vector(*this, StructuralParams{});
  for (std::size_t i = 0; i < kPositionalCount; ++i) check(static_cast<Param>(i), v[i], "positional.");
  if (delta <= 0.0) throw ParameterRangeError("positional.delta", "positional.delta must be > 0");
}

void StructuralParams::validate() const {
  const ParamVector v = to_vector(PositionalParams{}, *this);
  for (std::size_t i = kPositionalCount; i < kParamCount; ++i) check(static_cast<Param>(i), v[i], "structural.");
}

ZoneProfile::ZoneProfile() {
  using geometry::Zone;
  PPM residential;
  residential.strategy = Strategy::kBoundary;
  residential.positional.beta = 4.0;
  residential.structural = {20.0, 0.5, 0.3, 1.0, 4};

  PPM commercial;
  commercial.strategy = Strategy::kRegular;
  commercial.positional.sigma = 0.0;
  commercial.positional.omega = 9.0;
  commercial.positional.psi = 0.3;
  commercial.positional.eta = 30.0;
  commercial.structural = {16.0, 1.0, 0.0, 0.8, 2};

  PPM industrial;
  industrial.strategy = Strategy::kCluster;
  industrial.positional.mu = 3.2;
  industrial.positional.sigma = 0.25;
  industrial.positional.kappa = 10.0;
  industrial.positional.pi_max = 3;
  industrial.structural = {16.0, 0.2, 0.4, 1.0, 4};

  PPM street;
  street.strategy = Strategy::kEquidistant;
  street.positional.delta = 10.0;
  street.positional.sigma = 0.1;
  street.structural = {20.0, 1.0, 0.0, 0.7, 1};

  PPM other;
  other.strategy = Strategy::kRandom;
  other.positional.tau = 0.4;
  other.structural = {30.0, 0.5, 0.5, 1.0, 6};

  models_ = {{Zone::kResidential, residential},
             {Zone::kCommercial, commercial},
             {Zone::kIndustrial, industrial},
             {Zone::kStreet, street},
             {Zone::kOther, other}};
}

ParamVector to_vector(const PositionalParams& p, const StructuralParams& s) {
  return {p.mu,        p.sigma, p.tau,   p.beta,  p.kappa,
          static_cast<double>(p.pi_max), p.omega, p.psi, p.eta, p.delta, p.xi,
          s.alpha_max, s.rho,   s.theta, s.gamma, static_cast<double>(s.lambda)};
}

void from_vector(const ParamVector& v, PositionalParams& p, StructuralParams& s) {
  p.mu = v[0];
  p.sigma = v[1];
  p.tau = v[2];
  p.beta = v[3];
  p.kappa = v[4];
  p.pi_max = static_cast<int>(round_half_away(v[5]));
  p.omega = v[6];
  p.psi = v[7];
  p.eta = v[8];
  p.delta = v[9];
  p.xi = v[10];
  s.alpha_max = v[11];
  s.rho = v[12];
  s.theta = v[13];
  s.gamma = v[14];
  s.lambda = static_cast<int>(round_half_away(v[15]));
}

}  // namespace urbanveg::ppm
