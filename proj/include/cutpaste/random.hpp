#pragma once

#include <cstdint>
#include <random>

namespace cutpaste {

using Rng = std::mt19937_64;

// splitmix64 finalizer; per-shard seeds are derive_seed(master, shard).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

}  // namespace cutpaste
