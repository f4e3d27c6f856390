#pragma once

#include "supconv/sampled_function.hpp"

#include <vector>

namespace supconv {

/// Stage j of the sup-convolution dynamic program. States are the integer
/// vectors w >= 0 with sum(w) = j*N in lexicographic order; `best[w]` is the
/// largest sum f(x_1)+...+f(x_j) over lattice points with N(x_1+...+x_j) = w.
struct SupConvTable {
  int stage = 0;
  int dim = 0;
  int resolution = 0;
  RationalVector best;

  const Rational& at(std::span<const int> w) const;
};

/// Stages 1..n in order; stage 1 is f itself.
std::vector<SupConvTable> sup_convolution_tables(const SampledFunction& f, int n);

/// z -> max{ (f(x_1)+...+f(x_n))/n : x_i lattice points, sum x_i = n z }.
SampledFunction sup_convolve_n(const SampledFunction& f, int n);

/// z -> max{ (f(x)+g(y))/2 : x, y lattice points, x + y = 2z }.
SampledFunction sup_convolve_pair(const SampledFunction& f, const SampledFunction& g);

}  // namespace supconv
