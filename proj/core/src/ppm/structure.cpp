#include "urbanveg/ppm/structure.hpp"

#include <algorithm>
#include <numeric>

#include "urbanveg/errors.hpp"

namespace urbanveg::ppm {

using growth::SpeciesClass;
using growth::SpeciesPreset;

namespace {

const SpeciesPreset* first_of(const std::vector<const SpeciesPreset*>& order, SpeciesClass cls) {
  for (const SpeciesPreset* sp : order)
    if (sp->species_class == cls) return sp;
  return nullptr;
}

}  // namespace

std::vector<PlantSeed> assign_structure(const std::vector<sampling::Sample>& samples, const StructuralParams& s,
                                        const std::vector<SpeciesPreset>& library, Rng& rng) {
  s.validate();
  if (library.empty()) throw ConfigError("species", "species library is empty");
  if (library.size() < static_cast<std::size_t>(s.lambda))
    throw ConfigError("structural.lambda", "lambda = " + std::to_string(s.lambda) + " exceeds the " +
                                               std::to_string(library.size()) + " species in the library");
  const std::size_t n = samples.size();
  if (n == 0) return {};

  const auto n_tall = static_cast<std::size_t>(round_half_away(s.rho * static_cast<double>(n)));
  const std::size_t n_short = n - n_tall;
  const SpeciesClass dominant_class = n_tall >= n_short ? SpeciesClass::kTall : SpeciesClass::kShort;

  std::vector<const SpeciesPreset*> order;
  for (const SpeciesPreset& sp : library) order.push_back(&sp);
  rng.shuffle(std::span<const SpeciesPreset*>(order));

  // Available species: one per needed class first, then fill to lambda.
  std::vector<const SpeciesPreset*> available;
  std::vector<SpeciesClass> needed;
  if (s.lambda == 1) {
    needed.push_back(dominant_class);
  } else {
    if (n_tall > 0) needed.push_back(SpeciesClass::kTall);
    if (n_short > 0) needed.push_back(SpeciesClass::kShort);
  }
  for (SpeciesClass cls : needed) {
    const SpeciesPreset* sp = first_of(order, cls);
    if (sp == nullptr)
      throw ConfigError("species", "species library has no " + std::string(growth::to_string(cls)) + "-class species");
    available.push_back(sp);
  }
  // Needed classes first so lambda is not spent on a class nobody uses.
  for (int pass = 0; pass < 2; ++pass) {
    for (const SpeciesPreset* sp : order) {
      if (available.size() >= static_cast<std::size_t>(s.lambda)) break;
      const bool wanted = std::find(needed.begin(), needed.end(), sp->species_class) != needed.end();
      if (wanted != (pass == 0)) continue;
      if (std::find(available.begin(), available.end(), sp) == available.end()) available.push_back(sp);
    }
  }

  // Which samples are tall.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(idx));
  std::vector<SpeciesClass> cls(n, SpeciesClass::kShort);
  for (std::size_t i = 0; i < n_tall; ++i) cls[idx[i]] = SpeciesClass::kTall;

  std::vector<PlantSeed> out(n);
  if (s.lambda == 1) {
    for (PlantSeed& seed : out) seed.species = available.front()->id;
  } else {
    auto pool_of = [&](SpeciesClass c) {
      std::vector<const SpeciesPreset*> pool;
      for (const SpeciesPreset* sp : available)
        if (sp->species_class == c) pool.push_back(sp);
      return pool;
    };
    const auto dominant_pool = pool_of(dominant_class);
    const SpeciesPreset* dominant = dominant_pool[rng.below(dominant_pool.size())];

    std::vector<std::size_t> members;
    for (std::size_t i : idx)
      if (cls[i] == dominant_class) members.push_back(i);
    const auto n_dom = std::min<std::size_t>(
        static_cast<std::size_t>(round_half_away((1.0 - s.theta) * static_cast<double>(n))), members.size());

    std::vector<bool> is_dominant(n, false);
    for (std::size_t k = 0; k < n_dom; ++k) is_dominant[members[k]] = true;

    const auto tall_pool = pool_of(SpeciesClass::kTall);
    const auto short_pool = pool_of(SpeciesClass::kShort);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_dominant[i]) {
        out[i].species = dominant->id;
        continue;
      }
      std::vector<const SpeciesPreset*> pool = cls[i] == SpeciesClass::kTall ? tall_pool : short_pool;
      if (cls[i] == dominant_class && pool.size() > 1) std::erase(pool, dominant);
      out[i].species = pool[rng.below(pool.size())]->id;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    out[i].position = samples[i].position;
    out[i].radius = samples[i].radius;
    out[i].age = rng.uniform(0.5 * s.alpha_max, s.alpha_max);
    out[i].prune_factor = s.gamma;
  }
  return out;
}

}  // namespace urbanveg::ppm
