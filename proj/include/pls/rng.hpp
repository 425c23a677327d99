#pragma once

#include <cmath>
#include <cstdint>

// Deterministic, platform-independent randomness. Everything that consumes
// randomness in this project goes through these helpers, so that a single
// 64-bit seed reproduces a run bit-for-bit. We deliberately avoid
// std::uniform_*_distribution, whose output is implementation-defined.

namespace pls {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Keyed PRF used to expand one seed into independent sub-streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

/// Small deterministic PRNG (splitmix64 sequence).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Uniform in [0, bound). bound must be > 0. Rejection sampling keeps the
  /// result independent of the platform's integer division quirks.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Sample from an exponential of the given rate truncated to [0, cap]
/// (inverse CDF applied to one uniform draw).
inline double trunc_exp_sample(Rng& rng, double rate, double cap) {
  if (cap <= 0.0) return 0.0;
  if (rate <= 0.0) return rng.next_unit() * cap;
  const double mass = 1.0 - std::exp(-rate * cap);
  const double u = rng.next_unit();
  double x = -std::log1p(-u * mass) / rate;
  if (x > cap) x = cap;
  return x;
}

}  // namespace pls
