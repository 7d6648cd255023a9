#pragma once

// Deterministic, splittable random streams. Experiments derive one substream
// per (master seed, experiment id, N, trial) so trials can run in any order,
// on any number of threads, and still reproduce bit-identical results.

#include <cstdint>
#include <string_view>

namespace gavsa {

inline std::uint64_t splitmix64_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t s = seed ^ (value + 0x9E3779B97F4A7C15ull);
  return splitmix64_step(s);
}

inline std::uint64_t hash_string(std::string_view text) {
  // FNV-1a
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

/// xoshiro256** seeded through splitmix64. Hand-rolled sampling helpers keep
/// the byte streams identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_step(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform n-bit mask, all 2^n values equally likely (1 <= bits <= 63).
  std::uint64_t uniform_mask(int bits) {
    return next_u64() & ((bits >= 64) ? ~0ull : ((1ull << bits) - 1ull));
  }

  /// Uniform integer in [0, bound) by rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  /// Uniform double in [0, 1).
  double unit_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Normal(0, stddev^2) via Box-Muller; consumes two words per call.
  double normal(double stddev);

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

/// Seed for the per-trial stream of an experiment cell.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view experiment_id,
                                    std::int64_t n, std::int64_t trial) {
  std::uint64_t s = mix_seed(master, hash_string(experiment_id));
  s = mix_seed(s, static_cast<std::uint64_t>(n));
  return mix_seed(s, static_cast<std::uint64_t>(trial));
}

/// Independent child stream (per construction, per model, ...).
inline std::uint64_t child_seed(std::uint64_t parent, std::string_view tag) {
  return mix_seed(parent, hash_string(tag));
}

}  // namespace gavsa
