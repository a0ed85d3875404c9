#pragma once

#include <cstdint>

namespace tgr {

// splitmix64. Chosen for the benchmark harness because the sequence is fully
// pinned by the seed and identical on every platform, so benchmark reports can
// be compared byte for byte. Bounded draws use plain modulo reduction; the
// bias is irrelevant at the bounds involved and keeps the mapping trivial to
// reproduce elsewhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); bound == 0 yields 0.
  std::uint64_t next_below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }
};

}  // namespace tgr
