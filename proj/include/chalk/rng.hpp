#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace chalk {

/// Deterministic RNG used everywhere in the pipeline. Wraps the
/// standard-specified mt19937_64 engine but implements its own
/// distribution transforms: the std::*_distribution classes are not
/// pinned by the standard, and samples must be reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Unbiased uniform integer in [0, n). n must be > 0.
  uint64_t uniform_index(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  int uniform_int(int lo, int hi_inclusive) {
    return lo + static_cast<int>(uniform_index(static_cast<uint64_t>(hi_inclusive - lo + 1)));
  }

  /// Standard normal via Box-Muller (cosine branch only, so draw count
  /// per call is fixed).
  double normal01() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Categorical draw over non-negative weights; returns the index.
  size_t categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = uniform01() * total;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

 private:
  std::mt19937_64 eng_;
};

/// Stateless per-pixel hash noise (used by procedural textures so a
/// pixel's value never depends on evaluation order).
inline uint32_t hash_noise(uint64_t seed, uint32_t x, uint32_t y) {
  uint64_t h = seed ^ (static_cast<uint64_t>(x) * 0x9E3779B97F4A7C15ull) ^
               (static_cast<uint64_t>(y) * 0xC2B2AE3D27D4EB4Full);
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 31;
  return static_cast<uint32_t>(h);
}

/// Seed derivation for pipeline stages: SHA-256 over a tagged tuple,
/// truncated to 64 bits. Implemented in hash.cpp (needs libcrypto).
uint64_t derive_seed(uint64_t master_seed, std::string_view school, uint32_t student_index,
                     std::string_view stage);

}  // namespace chalk
