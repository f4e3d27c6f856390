#include "supconv/prng.hpp"

namespace supconv {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  const u128 wide = static_cast<u128>(next()) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace supconv
