#pragma once

#include <cstdint>

namespace rotkit {

// SplitMix64 stream. Bounded draws go through our own rejection sampler, so
// sequences are identical on every platform and standard library.
struct SplitMix64 {
  std::uint64_t state = 0;

  SplitMix64() = default;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound); bound must be >= 1. Unbiased: draws below
  // 2^64 mod bound are rejected before the modulo.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t cutoff = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= cutoff) return r % bound;
    }
  }
};

// Seed of worker substream `stream` for a run seeded with `seed`. Workers draw
// from disjoint SplitMix64 streams and merge by commutative sums, so results
// are reproducible for a fixed (seed, worker count).
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0xA3EC647659359ACDull * (stream + 1)));
  return g.next();
}

}  // namespace rotkit
