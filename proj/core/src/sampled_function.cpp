#include "supconv/sampled_function.hpp"

#include "supconv/error.hpp"

namespace supconv {

SampledFunction::SampledFunction(BaryLattice lattice, RationalVector values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  require(values_.size() == lattice_.size(), ErrorKind::InvalidInput,
          "sampled function needs exactly one value per lattice point");
}

SampledFunction::SampledFunction(BaryLattice lattice, const Rational& value)
    : lattice_(std::move(lattice)), values_(lattice_.size(), value) {}

SampledFunction SampledFunction::affine(BaryLattice lattice, const RationalVector& vertex_values) {
  require(vertex_values.size() == static_cast<std::size_t>(lattice.dim()) + 1, ErrorKind::InvalidInput,
          "affine function needs one value per vertex");
  RationalVector values;
  values.reserve(lattice.size());
  for (const auto& c : lattice.compositions()) {
    Rational v;
    for (std::size_t i = 0; i < c.size(); ++i) v += vertex_values[i] * c[i];
    values.push_back(v / lattice.resolution());
  }
  return SampledFunction(std::move(lattice), std::move(values));
}

SampledFunction SampledFunction::operator+(const SampledFunction& rhs) const {
  require(lattice_ == rhs.lattice_, ErrorKind::InvalidInput, "lattice mismatch");
  RationalVector out = values_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.values_[i];
  return SampledFunction(lattice_, std::move(out));
}

SampledFunction SampledFunction::operator-(const SampledFunction& rhs) const {
  require(lattice_ == rhs.lattice_, ErrorKind::InvalidInput, "lattice mismatch");
  RationalVector out = values_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.values_[i];
  return SampledFunction(lattice_, std::move(out));
}

SampledFunction SampledFunction::scaled(const Rational& factor) const {
  RationalVector out = values_;
  for (auto& v : out) v *= factor;
  return SampledFunction(lattice_, std::move(out));
}

Rational lattice_mean(const SampledFunction& f) {
  Rational sum;
  for (const auto& v : f.values()) sum += v;
  return sum / static_cast<long>(f.size());
}

bool pointwise_leq(const SampledFunction& a, const SampledFunction& b) {
  require(a.lattice() == b.lattice(), ErrorKind::InvalidInput, "lattice mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace supconv
