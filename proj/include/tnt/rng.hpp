#pragma once

#include <cstdint>
#include <random>

namespace tnt {

// std::uniform_real_distribution is implementation-defined, so seeded runs
// would not be reproducible across standard libraries. These helpers pin the
// exact bit stream drawn from a mt19937_64.

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Unbiased integer in [0, n).
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi_inclusive) {
  return lo + static_cast<int>(
                  uniform_index(rng, static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
}

}  // namespace tnt
