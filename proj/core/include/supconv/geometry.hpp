#pragma once

#include "supconv/linalg.hpp"
#include "supconv/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace supconv {

/// Non-negative integer vector; used for lattice points scaled by their
/// resolution and for the index vectors of subdivision cells.
using Composition = std::vector<int>;

/// A point of R^{k+1} in barycentric form. Coordinates sum to `total()`
/// exactly; points of the standard simplex have total 1.
class BaryPoint {
 public:
  BaryPoint() = default;
  explicit BaryPoint(RationalVector coords);

  static BaryPoint from_composition(std::span<const int> parts, int resolution);
  static BaryPoint vertex(int k, int i);
  static BaryPoint barycenter(int k);

  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational total() const;
  bool in_standard_simplex() const;

  bool operator==(const BaryPoint& rhs) const = default;

 private:
  RationalVector coords_;
};

/// k-simplex given by k+1 affinely independent points sharing one
/// coordinate total.
class SimplexGeom {
 public:
  explicit SimplexGeom(std::vector<BaryPoint> vertices);

  static SimplexGeom standard(int k);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<BaryPoint>& vertices() const { return vertices_; }
  const BaryPoint& vertex(std::size_t i) const { return vertices_[i]; }
  /// Columns are the vertex coordinate vectors.
  Matrix vertex_matrix() const;

 private:
  std::vector<BaryPoint> vertices_;
};

/// vol(s) / vol(T) in the chart that drops the last coordinate.
Rational relative_volume(const SimplexGeom& s);

/// Signed version of the chart determinant ratio; the sign records
/// orientation relative to the standard simplex.
Rational signed_relative_volume(const SimplexGeom& s);

/// Weights expressing `p` as an affine combination of the simplex vertices.
RationalVector barycentric_coordinates(const SimplexGeom& s, const BaryPoint& p);

bool contains(const SimplexGeom& s, const BaryPoint& p);
/// Strict version: all barycentric weights positive.
bool contains_interior(const SimplexGeom& s, const BaryPoint& p);

/// A point interior to both simplices, or nullopt when their interiors are
/// disjoint. Decided exactly by maximizing the smallest barycentric weight of
/// a shared point over both simplices.
std::optional<BaryPoint> common_interior_point(const SimplexGeom& a, const SimplexGeom& b);

/// All compositions of `total` into `parts` non-negative parts, in
/// lexicographic order of the integer vectors.
std::vector<Composition> enumerate_compositions(int total, int parts);
/// Number of compositions of `total` into `parts` parts: C(total+parts-1, parts-1).
std::size_t composition_count(int total, int parts);
/// Position of `c` in enumerate_compositions(sum(c), c.size()).
std::size_t composition_rank(std::span<const int> c);

/// Points of T with coordinates in (1/N)Z, enumerated lexicographically on
/// the integer vectors N*p.
class BaryLattice {
 public:
  BaryLattice(int k, int resolution);

  int dim() const { return k_; }
  int resolution() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Composition>& compositions() const { return points_; }
  const Composition& composition(std::size_t i) const { return points_[i]; }
  BaryPoint point(std::size_t i) const { return BaryPoint::from_composition(points_[i], n_); }
  std::size_t index_of(std::span<const int> c) const;
  /// Indices of the k+1 vertices of T, ordered e_1..e_{k+1}.
  std::vector<std::size_t> vertex_indices() const;

  bool operator==(const BaryLattice& rhs) const { return k_ == rhs.k_ && n_ == rhs.n_; }

 private:
  int k_;
  int n_;
  std::vector<Composition> points_;
};

BaryLattice lattice(int k, int resolution);

void check_dimension(int k);

}  // namespace supconv
