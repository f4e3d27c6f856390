#pragma once

#include "supconv/geometry.hpp"
#include "supconv/prng.hpp"
#include "supconv/sampled_function.hpp"

#include <cstdint>

namespace supconv {

/// Vertex indicator after normalization: 0 at the k+1 vertices of T and -1
/// at every other lattice point.
SampledFunction make_extremal(int k, int resolution);

/// Deterministic random function with values in [-1, 0] and 0 at the
/// vertices. Lattice points are visited in order; for each non-vertex point
/// one draw u = unit() is taken and, if u < roughness, a second draw
/// r = below(1001) sets the value to -r/1000. Otherwise the value is 0.
SampledFunction make_random(int k, int resolution, std::uint64_t seed, double roughness);

/// Random point of T with positive coordinates u_i / sum(u), u_i drawn from
/// [1, bound]. Almost never on a lattice hyperplane for large bounds.
BaryPoint random_point(int k, SplitMix64& rng, std::uint64_t bound = 1000003);

}  // namespace supconv
