#pragma once

#include "supconv/geometry.hpp"
#include "supconv/rational.hpp"

#include <cstddef>
#include <span>

namespace supconv {

/// Rational values on the points of a BaryLattice, indexed in the lattice's
/// lexicographic order.
class SampledFunction {
 public:
  SampledFunction(BaryLattice lattice, RationalVector values);

  /// Constant function.
  SampledFunction(BaryLattice lattice, const Rational& value);

  /// Samples x -> sum_i x_i * vertex_values[i].
  static SampledFunction affine(BaryLattice lattice, const RationalVector& vertex_values);

  const BaryLattice& lattice() const { return lattice_; }
  int dim() const { return lattice_.dim(); }
  int resolution() const { return lattice_.resolution(); }
  std::size_t size() const { return values_.size(); }

  const RationalVector& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& at(std::span<const int> composition) const {
    return values_[lattice_.index_of(composition)];
  }

  SampledFunction operator+(const SampledFunction& rhs) const;
  SampledFunction operator-(const SampledFunction& rhs) const;
  SampledFunction scaled(const Rational& factor) const;

  bool operator==(const SampledFunction& rhs) const = default;

 private:
  BaryLattice lattice_;
  RationalVector values_;
};

/// Equal-weight quadrature: mean value over the lattice points, i.e. the
/// integral over T with |T| normalized to 1.
Rational lattice_mean(const SampledFunction& f);

bool pointwise_leq(const SampledFunction& a, const SampledFunction& b);

}  // namespace supconv
