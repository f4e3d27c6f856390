#pragma once

#include "supconv/geometry.hpp"
#include "supconv/rational.hpp"

#include <vector>

namespace supconv {

/// B_{k,l}: all v in Z_{>=0}^{k+1} with coordinate sum l, lexicographic.
std::vector<Composition> enumerate_B(int k, int l);

/// The cell (1/n)P_{k,m} + (1/n)v of the hypersimplex subdivision of T,
/// kept symbolically. `value_on_cell` is (n-m)/n, the value the n-fold
/// sup-convolution of the vertex indicator takes on the cell interior.
struct SubdivisionCell {
  int m = 0;
  Composition v;
  Rational value_on_cell;

  bool operator==(const SubdivisionCell& rhs) const = default;
};

/// vol(P_{k,m}) / vol(T), by inclusion-exclusion over the faces of the unit
/// cube (Irwin-Hall). Independent of the Eulerian recurrence.
Rational hypersimplex_relative_volume(int k, int m);

/// All cells for T subdivided at scale 1/n. Checks exactly that the cells
/// have disjoint interiors and that their volumes sum to 1; throws
/// std::logic_error otherwise.
std::vector<SubdivisionCell> subdivide(int k, int n);

Rational cell_relative_volume(int k, int n, const SubdivisionCell& cell);

/// Vertices (v + u)/n where u ranges over 0/1 vectors with m ones.
std::vector<BaryPoint> cell_vertices(int n, const SubdivisionCell& cell);

/// Closed and open containment: the cell is {x : v <= n x <= v + 1}.
bool cell_contains(int n, const SubdivisionCell& cell, const BaryPoint& z);
bool cell_contains_interior(int n, const SubdivisionCell& cell, const BaryPoint& z);

struct Classification {
  int m = 0;
  Composition v;
  // Largest number of vertices of T usable when writing z as an n-average.
  int vertex_usage = 0;
  // Some coordinate of n z is an integer, so z is not interior to one cell.
  bool on_boundary = false;
};

/// Floor rule: v = floor(n z), m = n - sum(v). On boundaries the floor cell
/// is still returned (flagged); when every coordinate of n z is integral the
/// floor gives m = 0 and the incident cell obtained by lowering the first
/// positive coordinate of v is returned instead.
Classification classify_point(int k, int n, const BaryPoint& z);

struct ExtremalLevel {
  int m = 0;
  Integer cell_count;
  Rational cell_relative_volume;
  Rational value;  // (n-m)/n
};

/// Exact integrals for the normalized vertex indicator (0 at vertices, -1
/// elsewhere), whose envelope is identically 0.
struct ExtremalProfile {
  int k = 0;
  int n = 0;
  std::vector<ExtremalLevel> per_m;
  Rational lhs;    // integral of f^{*n} - f
  Rational rhs;    // integral of co(f) - f
  Rational ratio;  // lhs / rhs
};

ExtremalProfile extremal_profile(int k, int n);

}  // namespace supconv
