#pragma once

#include "supconv/sampled_function.hpp"

#include <cstddef>
#include <vector>

namespace supconv {

struct SupportPoint {
  std::size_t index = 0;  // lattice index
  Rational weight;
};

/// Discrete concave envelope: for each lattice point z, the largest convex
/// combination of f-values over lattice points averaging to z.
struct EnvelopeResult {
  SampledFunction envelope;
  // At most k+1 support points with positive weights per lattice point.
  std::vector<std::vector<SupportPoint>> certificates;
};

EnvelopeResult concave_envelope(const SampledFunction& f);

/// Checks every certificate exactly: weights positive and summing to 1, the
/// weighted positions reproduce the point and the weighted f-values
/// reproduce the envelope value.
bool certificates_valid(const SampledFunction& f, const EnvelopeResult& result);

/// f minus the affine function through its envelope values at the vertices
/// of T. The result is 0 at the vertices; when co(f) is affine it is <= 0.
SampledFunction normalize_to_simplex_form(const SampledFunction& f);

}  // namespace supconv
