#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace chromadist {

/// Mixes (master, component, index) into an independent 64-bit stream seed.
/// Stable across platforms and releases: FNV-1a over the component name,
/// folded with splitmix64.
std::uint64_t derive_seed(std::uint64_t master, std::string_view component, std::uint64_t index = 0);

/// Deterministic random source. Draws are built directly on mt19937_64 output
/// so that results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return uniform01() < p;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chromadist
