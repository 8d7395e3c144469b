#pragma once

#include <cmath>
#include <cstdint>

#include "optiflock/angles.hpp"

namespace optiflock {

/// splitmix64: small, fast, well-studied 64-bit generator. Every noise draw in
/// a run comes from a stream keyed by (seed, purpose, step, agent), so results
/// cannot depend on evaluation order or thread scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Two independent standard-normal deviates via Box-Muller.
  void next_gauss_pair(double& g1, double& g2) {
    const double u1 = 1.0 - next_unit();  // (0, 1]; keeps the log finite
    const double u2 = next_unit();
    const double m = std::sqrt(-2.0 * std::log(u1));
    g1 = m * std::cos(2.0 * kPi * u2);
    g2 = m * std::sin(2.0 * kPi * u2);
  }

 private:
  std::uint64_t state_;
};

namespace rng_purpose {
inline constexpr std::uint64_t kInit = 0;   // initial-condition sampling
inline constexpr std::uint64_t kSense = 1;  // per-(step, agent) measurement noise
}  // namespace rng_purpose

/// Derives the seed of one substream. Chained splitmix64 finalizers; the same
/// (seed, purpose, step, agent) always maps to the same stream.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t purpose,
                               std::uint64_t step, std::uint64_t agent) {
  const auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed ^ mix(purpose)) + step) + agent);
}

}  // namespace optiflock
