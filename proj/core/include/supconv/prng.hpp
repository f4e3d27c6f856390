#pragma once

#include <cstdint>

namespace supconv {

/// SplitMix64. Every random quantity in the library derives from this
/// stream so outputs are reproducible across implementations:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) via the high 64 bits of next() * bound.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1): (next() >> 11) * 2^-53.
  double unit();

 private:
  std::uint64_t state_;
};

}  // namespace supconv
