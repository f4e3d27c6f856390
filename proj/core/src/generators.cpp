#include "supconv/generators.hpp"

#include "supconv/error.hpp"

#include <algorithm>

namespace supconv {

SampledFunction make_extremal(int k, int resolution) {
  BaryLattice lat(k, resolution);
  RationalVector values(lat.size(), Rational(-1));
  for (std::size_t idx : lat.vertex_indices()) values[idx] = 0;
  return SampledFunction(std::move(lat), std::move(values));
}

SampledFunction make_random(int k, int resolution, std::uint64_t seed, double roughness) {
  require(roughness >= 0.0 && roughness <= 1.0, ErrorKind::InvalidInput, "roughness must lie in [0, 1]");
  BaryLattice lat(k, resolution);
  const auto vertices = lat.vertex_indices();
  SplitMix64 rng(seed);
  RationalVector values(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (std::find(vertices.begin(), vertices.end(), i) != vertices.end()) continue;
    if (rng.unit() < roughness) {
      values[i] = make_rational(-static_cast<long>(rng.below(1001)), 1000);
    }
  }
  return SampledFunction(std::move(lat), std::move(values));
}

BaryPoint random_point(int k, SplitMix64& rng, std::uint64_t bound) {
  std::vector<long> u(static_cast<std::size_t>(k) + 1);
  long total = 0;
  for (auto& x : u) {
    x = static_cast<long>(rng.below(bound)) + 1;
    total += x;
  }
  RationalVector coords;
  for (long x : u) coords.push_back(make_rational(x, total));
  return BaryPoint(std::move(coords));
}

}  // namespace supconv
