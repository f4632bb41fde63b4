#pragma once

#include <cstdint>

namespace eop {

/// splitmix64 (Steele, Lea, Flood 2014; public-domain reference constants).
/// Chosen over std::mt19937_64 + <random> distributions because the mapping
/// from seed to output stream here is fully pinned down: corpora regenerate
/// bit-identically on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound must be positive. Plain modulo reduction:
  /// the tiny bias is irrelevant for test corpora and keeps the mapping
  /// portable.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace eop
