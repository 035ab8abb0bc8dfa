#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace urbanveg {

/// Seeded generator shared by every stochastic operation.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard)
/// and derives doubles, bounded integers and normals from raw 64-bit words
/// itself, so results are bit-identical across standard libraries. The
/// std::*_distribution adaptors are implementation-defined and are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);
  /// Normal deviate (Box-Muller, no cached spare).
  double normal(double mean, double stddev);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Stable per-key seed: independent streams for e.g. each lot id, so the
/// result for one lot does not depend on which other lots are processed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);

/// Half-away-from-zero rounding used for every seed count.
long long round_half_away(double v);

}  // namespace urbanveg
