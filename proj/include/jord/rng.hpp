#pragma once
#include <cstdint>

namespace jord {

// 64-bit linear congruential generator (Knuth MMIX multiplier/increment),
// output tempered by an xor-shift of the high bits. Deterministic on every
// platform: all arithmetic is on uint64_t. Randomized checks derive one
// independent stream per trial via split() so results do not depend on how
// trials are scheduled across threads.
struct Lcg64 {
  uint64_t state;

  explicit Lcg64(uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ULL + 1) {}

  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint64_t x = state;
    x ^= x >> 33;
    return x;
  }

  // integer uniform in [lo, hi] inclusive
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + int64_t(next() % span);
  }

  static Lcg64 split(uint64_t seed, uint64_t stream) {
    return Lcg64(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  }
};

constexpr uint64_t kDefaultSeed = 42;

}  // namespace jord
