#ifndef GSSEL_RNG_HPP
#define GSSEL_RNG_HPP

#include <cstdint>

// Deterministic, platform-independent random numbers. All randomized paths
// in the library (instance generation, benchmark scenario seeds) go through
// SplitMix64 so that a seed reproduces bit-identical results everywhere;
// the standard <random> distributions are deliberately avoided because their
// output is not pinned by the standard.

namespace gssel {

// SplitMix64 finalizer: bijective 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform on the closed interval [0, 1] with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740991.0);
  }

  // Uniform on the closed interval [low, high]; returns exactly low when
  // low == high.
  double next_uniform(double low, double high) {
    return low + next_unit() * (high - low);
  }

 private:
  std::uint64_t state_;
};

// Seed for one benchmark scenario attempt, derived so that scenarios are
// independent of each other and of how many attempts earlier scenarios used.
inline std::uint64_t derive_scenario_seed(std::uint64_t master_seed,
                                          std::uint64_t k_value,
                                          std::uint64_t scenario_index,
                                          std::uint64_t attempt) {
  std::uint64_t h = master_seed;
  h = mix64(h ^ (0x9E3779B97F4A7C15ULL + k_value));
  h = mix64(h ^ (0xC2B2AE3D27D4EB4FULL + scenario_index));
  h = mix64(h ^ (0x165667B19E3779F9ULL + attempt));
  return h;
}

}  // namespace gssel

#endif  // GSSEL_RNG_HPP
