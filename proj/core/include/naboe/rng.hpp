#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace naboe {

// mt19937_64 output is fully specified by the standard; the helpers below
// avoid std::uniform_*_distribution and std::shuffle, whose results are
// implementation-defined. Seeded runs must reproduce bit-for-bit everywhere.

inline double uniform_unit(std::mt19937_64& rng) {
  // 53 random bits -> [0, 1)
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

// Modulo bias is negligible for n << 2^64 and keeps the draw deterministic.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace naboe
