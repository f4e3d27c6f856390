#include "supconv/geometry.hpp"

#include "supconv/error.hpp"
#include "supconv/lp.hpp"

#include <numeric>
#include <string>

namespace supconv {

void check_dimension(int k) {
  require(k >= 1 && k <= kMaxDimension, ErrorKind::InvalidInput,
          "dimension k=" + std::to_string(k) + " outside [1, " + std::to_string(kMaxDimension) + "]");
}

BaryPoint::BaryPoint(RationalVector coords) : coords_(std::move(coords)) {
  require(coords_.size() >= 2, ErrorKind::InvalidInput, "barycentric point needs at least 2 coordinates");
}

BaryPoint BaryPoint::from_composition(std::span<const int> parts, int resolution) {
  require(resolution > 0, ErrorKind::InvalidInput, "resolution must be positive");
  RationalVector coords;
  coords.reserve(parts.size());
  for (int c : parts) coords.push_back(make_rational(c, resolution));
  return BaryPoint(std::move(coords));
}

BaryPoint BaryPoint::vertex(int k, int i) {
  RationalVector coords(static_cast<std::size_t>(k) + 1);
  coords.at(static_cast<std::size_t>(i)) = 1;
  return BaryPoint(std::move(coords));
}

BaryPoint BaryPoint::barycenter(int k) {
  return BaryPoint(RationalVector(static_cast<std::size_t>(k) + 1, make_rational(1, k + 1)));
}

Rational BaryPoint::total() const {
  return std::accumulate(coords_.begin(), coords_.end(), Rational(0));
}

bool BaryPoint::in_standard_simplex() const {
  for (const auto& x : coords_) {
    if (x < 0) return false;
  }
  return total() == 1;
}

SimplexGeom::SimplexGeom(std::vector<BaryPoint> vertices) : vertices_(std::move(vertices)) {
  require(vertices_.size() >= 2, ErrorKind::InvalidInput, "simplex needs at least 2 vertices");
  const std::size_t width = vertices_.front().coords().size();
  require(width == vertices_.size(), ErrorKind::InvalidInput,
          "a k-simplex in barycentric form needs exactly k+1 vertices");
  const Rational total = vertices_.front().total();
  for (const auto& v : vertices_) {
    require(v.coords().size() == width, ErrorKind::InvalidInput, "simplex vertices differ in dimension");
    require(v.total() == total, ErrorKind::InvalidInput, "simplex vertices lie on different hyperplanes");
  }
  require(total != 0, ErrorKind::DegenerateInput, "simplex hyperplane passes through the origin");
  require(rank(vertex_matrix()) == width, ErrorKind::DegenerateInput, "simplex vertices are affinely dependent");
}

SimplexGeom SimplexGeom::standard(int k) {
  std::vector<BaryPoint> verts;
  for (int i = 0; i <= k; ++i) verts.push_back(BaryPoint::vertex(k, i));
  return SimplexGeom(std::move(verts));
}

Matrix SimplexGeom::vertex_matrix() const {
  std::vector<RationalVector> cols;
  cols.reserve(vertices_.size());
  for (const auto& v : vertices_) cols.push_back(v.coords());
  return Matrix::from_columns(cols);
}

namespace {

// Determinant of the vertex differences v_i - v_0 in the chart that drops the
// last barycentric coordinate.
Rational chart_determinant(const std::vector<BaryPoint>& verts) {
  const std::size_t k = verts.size() - 1;
  Matrix m(k, k);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i - 1, j) = verts[i][j] - verts[0][j];
  return determinant(std::move(m));
}

}  // namespace

Rational signed_relative_volume(const SimplexGeom& s) {
  const Rational reference = chart_determinant(SimplexGeom::standard(s.dim()).vertices());
  const Rational det = chart_determinant(s.vertices());
  require(det != 0, ErrorKind::DegenerateInput, "degenerate simplex has zero volume");
  return det / reference;
}

Rational relative_volume(const SimplexGeom& s) { return abs(signed_relative_volume(s)); }

RationalVector barycentric_coordinates(const SimplexGeom& s, const BaryPoint& p) {
  require(p.coords().size() == s.vertices().size(), ErrorKind::InvalidInput,
          "point and simplex differ in dimension");
  auto weights = solve(s.vertex_matrix(), p.coords());
  require(weights.has_value(), ErrorKind::DegenerateInput, "simplex vertex matrix is singular");
  return *weights;
}

bool contains(const SimplexGeom& s, const BaryPoint& p) {
  const auto w = barycentric_coordinates(s, p);
  Rational sum;
  for (const auto& x : w) {
    if (x < 0) return false;
    sum += x;
  }
  return sum == 1;
}

bool contains_interior(const SimplexGeom& s, const BaryPoint& p) {
  const auto w = barycentric_coordinates(s, p);
  Rational sum;
  for (const auto& x : w) {
    if (x <= 0) return false;
    sum += x;
  }
  return sum == 1;
}

std::optional<BaryPoint> common_interior_point(const SimplexGeom& a, const SimplexGeom& b) {
  require(a.dim() == b.dim(), ErrorKind::InvalidInput, "simplices differ in dimension");
  require(a.vertex(0).total() == 1 && b.vertex(0).total() == 1, ErrorKind::InvalidInput,
          "simplices must lie in the hyperplane of T");
  const std::size_t k = static_cast<std::size_t>(a.dim());
  const std::size_t width = k + 1;
  // Variables: lambda' (width), mu' (width), t with lambda = lambda' + t,
  // mu = mu' + t. Rows: first k coordinates of sum(lambda a) - sum(mu b) = 0,
  // then sum(lambda) = 1 and sum(mu) = 1. The last coordinate is implied.
  const std::size_t nvars = 2 * width + 1;
  const std::size_t t_col = 2 * width;
  LinearProgram lp;
  lp.a = Matrix(k + 2, nvars);
  lp.b.assign(k + 2, 0);
  lp.c.assign(nvars, 0);
  lp.c[t_col] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      lp.a(i, j) = a.vertex(j)[i];
      lp.a(i, width + j) = -b.vertex(j)[i];
      lp.a(i, t_col) += a.vertex(j)[i] - b.vertex(j)[i];
    }
  }
  for (std::size_t j = 0; j < width; ++j) {
    lp.a(k, j) = 1;
    lp.a(k + 1, width + j) = 1;
  }
  lp.a(k, t_col) = static_cast<long>(width);
  lp.a(k + 1, t_col) = static_cast<long>(width);
  lp.b[k] = 1;
  lp.b[k + 1] = 1;

  const LpResult res = maximize(lp);
  if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
  RationalVector coords(width);
  for (std::size_t j = 0; j < width; ++j) {
    const Rational weight = res.x[j] + res.x[t_col];
    for (std::size_t i = 0; i < width; ++i) coords[i] += weight * a.vertex(j)[i];
  }
  return BaryPoint(std::move(coords));
}

namespace {

void compositions_rec(int remaining, std::size_t pos, Composition& cur, std::vector<Composition>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= remaining; ++x) {
    cur[pos] = x;
    compositions_rec(remaining - x, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int total, int parts) {
  require(total >= 0 && parts >= 1, ErrorKind::InvalidInput, "bad composition request");
  std::vector<Composition> out;
  out.reserve(composition_count(total, parts));
  Composition cur(static_cast<std::size_t>(parts));
  compositions_rec(total, 0, cur, out);
  return out;
}

std::size_t composition_count(int total, int parts) {
  if (total < 0 || parts < 1) return 0;
  // C(total+parts-1, parts-1) by the multiplicative formula; every partial
  // product is itself a binomial coefficient, so the division is exact.
  std::size_t out = 1;
  const auto r = static_cast<std::size_t>(parts - 1);
  const auto n = static_cast<std::size_t>(total) + r;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::size_t composition_rank(std::span<const int> c) {
  int remaining = std::accumulate(c.begin(), c.end(), 0);
  const int parts = static_cast<int>(c.size());
  std::size_t rank = 0;
  for (int i = 0; i + 1 < parts; ++i) {
    // Every composition with a smaller value at position i comes first.
    for (int t = 0; t < c[static_cast<std::size_t>(i)]; ++t) {
      rank += composition_count(remaining - t, parts - i - 1);
    }
    remaining -= c[static_cast<std::size_t>(i)];
  }
  return rank;
}

BaryLattice::BaryLattice(int k, int resolution) : k_(k), n_(resolution) {
  check_dimension(k);
  require(resolution >= 1, ErrorKind::InvalidInput, "lattice resolution must be >= 1");
  points_ = enumerate_compositions(resolution, k + 1);
}

std::size_t BaryLattice::index_of(std::span<const int> c) const {
  require(c.size() == static_cast<std::size_t>(k_) + 1, ErrorKind::InvalidInput, "lattice index: wrong dimension");
  int sum = 0;
  for (int x : c) {
    require(x >= 0, ErrorKind::InvalidInput, "lattice index: negative coordinate");
    sum += x;
  }
  require(sum == n_, ErrorKind::InvalidInput, "lattice index: coordinates do not sum to N");
  return composition_rank(c);
}

std::vector<std::size_t> BaryLattice::vertex_indices() const {
  std::vector<std::size_t> out;
  for (int i = 0; i <= k_; ++i) {
    Composition c(static_cast<std::size_t>(k_) + 1, 0);
    c[static_cast<std::size_t>(i)] = n_;
    out.push_back(index_of(c));
  }
  return out;
}

BaryLattice lattice(int k, int resolution) { return BaryLattice(k, resolution); }

}  // namespace supconv
