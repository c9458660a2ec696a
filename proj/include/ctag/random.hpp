#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "ctag/graph.hpp"

namespace ctag {

/**
 * Uniform integer in [0, bound) from a raw 32-bit Mersenne Twister stream.
 * Rejection sampling on the top multiple of `bound`; unlike
 * std::uniform_int_distribution the draw sequence is fixed by the standard
 * engine alone, so results are portable.
 */
inline std::uint32_t bounded_draw(std::mt19937& rng, std::uint32_t bound) {
  const std::uint64_t span = std::uint64_t{1} << 32;
  const std::uint64_t limit = span - span % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::uint32_t>(x % bound);
}

/// Fisher-Yates shuffle driven by bounded_draw.
template <typename T>
void portable_shuffle(std::span<T> items, std::mt19937& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = bounded_draw(rng, static_cast<std::uint32_t>(i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Inverse of the lexicographic enumeration (0,1),(0,2),...,(n-2,n-1).
inline Edge pair_from_index(int n, int index) {
  int u = 0;
  while (index >= n - 1 - u) {
    index -= n - 1 - u;
    ++u;
  }
  return {u, u + 1 + index};
}

}  // namespace ctag
