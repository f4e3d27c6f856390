#pragma once

#include "supconv/geometry.hpp"
#include "supconv/linalg.hpp"
#include "supconv/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supconv {

/// x -> linear * x + offset on `domain`, in barycentric coordinates.
struct AffinePiece {
  SimplexGeom domain;
  Matrix linear;
  RationalVector offset;

  /// The unique linear map (offset 0) sending domain vertex i to images[i].
  static AffinePiece from_vertex_images(SimplexGeom domain, const std::vector<BaryPoint>& images);

  BaryPoint apply(const BaryPoint& p) const;
  /// Images of the domain vertices; throws DegenerateInput when they
  /// collapse.
  SimplexGeom image() const;
  std::vector<BaryPoint> image_vertices() const;
  /// Determinant of the induced action on the directions of the hyperplane,
  /// in the chart that drops the last coordinate.
  Rational jacobian() const;
};

/// Piecewise-affine self-map of T. Domains are meant to tile T.
struct PLMap {
  std::vector<AffinePiece> pieces;

  static PLMap linear(int k, const Matrix& m);
  /// Evaluates on the first piece whose closed domain contains p.
  BaryPoint apply(const BaryPoint& p) const;
};

/// The set S that the averaged map should fill: either a scaled hypersimplex
/// (1/m)P_{k,m} or an explicit simplex.
struct AverageTarget {
  std::string description;
  int k = 0;
  std::optional<int> hypersimplex_m;
  std::optional<SimplexGeom> simplex;

  /// |S|/|T|: A(k,m-1)/m^k for a hypersimplex, a determinant otherwise.
  Rational relative_volume() const;
  bool contains(const BaryPoint& p) const;
};

struct AverageabilityCertificate {
  int k = 0;
  int m = 0;
  std::vector<PLMap> maps;
  AverageTarget target;
  // Pieces of (H_1 + ... + H_m)/m on the common refinement of the domains.
  std::vector<AffinePiece> average_pieces;
  std::vector<SimplexGeom> image_pieces;
  Rational jacobian;
};

/// Maps for (k,1) and (k,k) with k <= 4, and for (3,2). Other pairs throw
/// Error(NotConstructed).
AverageabilityCertificate build_maps(int k, int m);

/// k = 3: a vertex of T plus the opposite medial triangle, 2-averageable via
/// the identity and a 3-cycle of the remaining vertices.
AverageabilityCertificate build_medial_example();

/// (H_1 + ... + H_m)/m over the common refinement of the map domains. Maps
/// with several pieces must share the same domain list.
std::vector<AffinePiece> average_map(const std::vector<PLMap>& maps);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<BaryPoint> witness;
};

struct VerificationReport {
  bool passed = true;
  std::vector<CheckResult> checks;
};

struct FunctionalCheckOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  Rational tol_rel = make_rational(5, 100);
  Rational tol_abs = make_rational(1, 1000000000);
  int random_points = 200;
};

/// Exact checks of every certificate invariant, a random-point overlap
/// probe, and the integral inequality on random sampled functions.
VerificationReport verify_certificate(const AverageabilityCertificate& cert,
                                      const FunctionalCheckOptions& options = {});

}  // namespace supconv
