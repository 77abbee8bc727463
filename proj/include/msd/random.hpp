#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace msd {

// Unbiased draw in [0, bound). Written out instead of using
// std::uniform_int_distribution so generated digraphs are identical across
// standard library implementations.
inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

template <class T>
void shuffle(std::span<T> items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  shuffle(std::span<T>(items), rng);
}

}  // namespace msd
