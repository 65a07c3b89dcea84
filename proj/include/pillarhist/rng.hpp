#ifndef PILLARHIST_RNG_HPP
#define PILLARHIST_RNG_HPP

#include <cstdint>

namespace pillarhist {

// Stateless counter-based pseudo-random generator.
//
// Every random value in this project (layer weights, synthetic scenes) is a
// pure function of (seed, a, b), so two processes with the same seed produce
// identical bits regardless of call order or thread count. The word for a
// counter pair is three SplitMix64-style finalizer rounds chained over the
// seed and the two counters:
//
//   z0 = mix64(seed ^ 0x9E3779B97F4A7C15)
//   z1 = mix64(z0 + 0x9E3779B97F4A7C15 * (a + 1))
//   w  = mix64(z1 + 0xD1B54A32D192ED03 * (b + 1))
//
// where mix64 is the SplitMix64 output permutation.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b) {
  std::uint64_t z = mix64(seed ^ 0x9E3779B97F4A7C15ULL);
  z = mix64(z + 0x9E3779B97F4A7C15ULL * (a + 1));
  z = mix64(z + 0xD1B54A32D192ED03ULL * (b + 1));
  return z;
}

// Map a 64-bit word to [0, 1) using the top 53 bits.
inline double uniform01(std::uint64_t w) {
  return static_cast<double>(w >> 11) * 0x1.0p-53;
}

// Uniform in [lo, hi) for counter pair (a, b).
inline double uniform_at(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                         double lo, double hi) {
  return lo + (hi - lo) * uniform01(counter_rand(seed, a, b));
}

}  // namespace pillarhist

#endif  // PILLARHIST_RNG_HPP
