#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "rspcorr/types.hpp"

namespace rspcorr {

// Bits-to-double conversion is spelled out so that sequences are identical
// across standard libraries (std::uniform_real_distribution is not).
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

inline Vec3 random_unit(std::mt19937_64& eng) {
  const double z = uniform(eng, -1.0, 1.0);
  const double phi = uniform(eng, 0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based uniform draw in [0,1): the value for event `index` depends
/// only on (seed, index), never on the order in which events are generated.
inline double counter_uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t h = splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace rspcorr
