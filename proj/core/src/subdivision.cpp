#include "supconv/subdivision.hpp"

#include "supconv/combinatorics.hpp"
#include "supconv/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace supconv {

std::vector<Composition> enumerate_B(int k, int l) {
  require(k >= 1, ErrorKind::InvalidInput, "enumerate_B: k must be >= 1");
  require(l >= 0, ErrorKind::InvalidInput, "enumerate_B: l must be >= 0");
  return enumerate_compositions(l, k + 1);
}

Rational hypersimplex_relative_volume(int k, int m) {
  require(k >= 1 && m >= 1 && m <= k, ErrorKind::InvalidInput, "hypersimplex index out of range");
  Integer sum;
  for (int j = 0; j <= m; ++j) {
    Integer term = binomial(k + 1, j);
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m - j), static_cast<unsigned long>(k));
    term *= p;
    if (j % 2 == 0) sum += term; else sum -= term;
  }
  return Rational(sum);
}

Rational cell_relative_volume(int k, int n, const SubdivisionCell& cell) {
  return hypersimplex_relative_volume(k, cell.m) / pow(Rational(n), static_cast<unsigned>(k));
}

std::vector<SubdivisionCell> subdivide(int k, int n) {
  check_dimension(k);
  require(n >= 1, ErrorKind::InvalidInput, "subdivide: n must be >= 1");
  std::vector<SubdivisionCell> cells;
  for (int m = 1; m <= std::min(k, n); ++m) {
    for (auto& v : enumerate_B(k, n - m)) {
      cells.push_back({m, std::move(v), make_rational(n - m, n)});
    }
  }

  // Cell interiors are the open unit boxes (v, v+1) cut by the hyperplane;
  // distinct integer corners give disjoint open boxes.
  std::set<Composition> corners;
  Rational total;
  for (const auto& c : cells) {
    if (!corners.insert(c.v).second) throw std::logic_error("subdivide: repeated cell corner");
    total += cell_relative_volume(k, n, c);
  }
  if (total != 1) throw std::logic_error("subdivide: cell volumes do not sum to 1");
  return cells;
}

std::vector<BaryPoint> cell_vertices(int n, const SubdivisionCell& cell) {
  const int parts = static_cast<int>(cell.v.size());
  std::vector<BaryPoint> out;
  // Each 0/1 vector with m ones, in lexicographic order of the shifted result.
  for (const auto& u : enumerate_compositions(cell.m, parts)) {
    if (std::any_of(u.begin(), u.end(), [](int x) { return x > 1; })) continue;
    Composition shifted = cell.v;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += u[i];
    out.push_back(BaryPoint::from_composition(shifted, n));
  }
  return out;
}

namespace {

bool box_test(int n, const SubdivisionCell& cell, const BaryPoint& z, bool strict) {
  require(z.coords().size() == cell.v.size(), ErrorKind::InvalidInput, "cell and point differ in dimension");
  if (z.total() != 1) return false;
  for (std::size_t i = 0; i < cell.v.size(); ++i) {
    const Rational x = z[i] * n - cell.v[i];
    if (strict ? (x <= 0 || x >= 1) : (x < 0 || x > 1)) return false;
  }
  return true;
}

}  // namespace

bool cell_contains(int n, const SubdivisionCell& cell, const BaryPoint& z) {
  return box_test(n, cell, z, false);
}

bool cell_contains_interior(int n, const SubdivisionCell& cell, const BaryPoint& z) {
  return box_test(n, cell, z, true);
}

Classification classify_point(int k, int n, const BaryPoint& z) {
  check_dimension(k);
  require(n >= 1, ErrorKind::InvalidInput, "classify_point: n must be >= 1");
  require(z.dim() == k, ErrorKind::InvalidInput, "classify_point: dimension mismatch");
  require(z.in_standard_simplex(), ErrorKind::InvalidInput, "classify_point: point is not in T");

  Classification out;
  out.v.resize(static_cast<std::size_t>(k) + 1);
  int used = 0;
  for (int i = 0; i <= k; ++i) {
    const Rational scaled = z[static_cast<std::size_t>(i)] * n;
    out.v[static_cast<std::size_t>(i)] = static_cast<int>(floor(scaled).get_si());
    used += out.v[static_cast<std::size_t>(i)];
    if (is_integral(scaled)) out.on_boundary = true;
  }
  out.vertex_usage = used;
  out.m = n - used;
  if (out.m == 0) {
    auto it = std::find_if(out.v.begin(), out.v.end(), [](int x) { return x > 0; });
    --*it;
    out.m = 1;
  }
  return out;
}

ExtremalProfile extremal_profile(int k, int n) {
  check_dimension(k);
  require(n >= 2, ErrorKind::InvalidInput, "extremal_profile: n must be >= 2");
  ExtremalProfile p;
  p.k = k;
  p.n = n;
  const Rational scale = 1 / pow(Rational(n), static_cast<unsigned>(k));
  for (int m = 1; m <= std::min(k, n); ++m) {
    ExtremalLevel level;
    level.m = m;
    level.cell_count = binomial(n + k - m, k);
    level.cell_relative_volume = Rational(eulerian(k, m - 1)) * scale;
    level.value = make_rational(n - m, n);
    // Normalized: f^{*n} = -m/n on the level, f = -1 almost everywhere.
    p.lhs += Rational(level.cell_count) * level.cell_relative_volume * (1 - make_rational(m, n));
    p.per_m.push_back(std::move(level));
  }
  p.rhs = 1;
  p.ratio = p.lhs / p.rhs;
  return p;
}

}  // namespace supconv
