#pragma once

#include <cstdint>

#include "nlie/rational.hpp"

namespace nlie {

/// Deterministic 64-bit generator (splitmix64). Used everywhere randomness
/// is needed so seeded runs are byte-identical across platforms; never use
/// std::rand or an engine with unspecified constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via rejection; bound > 0.
  std::uint64_t bounded(std::uint64_t bound) {
    std::uint64_t threshold = -bound % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(
                    bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Small rational with numerator in [-num_max, num_max] and denominator
  /// in [1, den_max].
  Rational rational(long num_max, long den_max = 1) {
    return rat(range(-num_max, num_max), range(1, den_max));
  }

 private:
  std::uint64_t state_;
};

}  // namespace nlie
