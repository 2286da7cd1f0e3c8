#pragma once

#include <cstdint>

namespace modshor {

// SplitMix64 stream (Steele/Lea/Flood). Chosen over <random> engines because
// its output is fully pinned by this file alone: identical sequences on every
// platform and standard library. Substreams are derived with mix(), so blocks
// can be sampled concurrently without sharing generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps the
  // draw exactly uniform.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = bound * (~0ull / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Deterministic substream seed for (key, tag). Used as
  // SplitMix64(SplitMix64::mix(master_seed, block_index)).
  static std::uint64_t mix(std::uint64_t key, std::uint64_t tag) {
    SplitMix64 g(key);
    g.state_ += tag * 0x9e3779b97f4a7c15ull;
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace modshor
