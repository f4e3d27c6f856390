#pragma once

#include "supconv/geometry.hpp"
#include "supconv/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supconv {

enum class GoodRule { Base, Vertex, Combine };

/// One rule application. Offsets are integer vectors over the level's grid
/// denominator n^{level + grid_extra}; the translate is
/// offset/denominator + n^{-level} T.
struct DerivationNode {
  int level = 0;
  Composition offset;
  Rational constant;
  GoodRule rule = GoodRule::Base;
  int vertex = -1;                  // Vertex rule
  std::size_t first = 0;            // Vertex: parent; Combine: the (n-1)-weighted parent
  std::size_t second = 0;           // Combine: the 1-weighted parent
};

struct GoodTranslate {
  int level = 0;
  Composition offset;
  Integer denominator;
  Rational constant;
  std::size_t node = 0;

  RationalVector offset_point() const;
  SimplexGeom simplex(int n) const;
};

struct ClosureOptions {
  // Combination results are kept when their offset lies on the grid
  // n^{-(level + grid_extra)} Z.
  int grid_extra = 1;
  std::size_t node_budget = 200000;
  int combine_rounds = 8;
};

/// Closure of {T} under the vertex rule ((n-1)v + T')/n and the combination
/// rule ((n-1)T' + T'')/n, keeping the smallest known constant per offset.
struct GoodClosure {
  int k = 0;
  int n = 0;
  ClosureOptions options;
  std::vector<DerivationNode> nodes;
  // Per level, node ids of the best constant for each offset, ordered by
  // offset.
  std::vector<std::vector<std::size_t>> best;
  bool truncated = false;
  // Combination rounds stopped at the cap while constants were still
  // improving.
  bool rounds_exhausted = false;

  Integer denominator(int level) const;
  std::vector<GoodTranslate> translates(int level) const;
  /// Replays the rules along the derivation of `node` and returns the
  /// recomputed constant; throws std::logic_error if an offset does not
  /// match its rule.
  Rational replay(std::size_t node) const;
  /// Post-order list of the nodes the derivation of `node` depends on.
  std::vector<std::size_t> trace(std::size_t node) const;
};

GoodClosure closure_good(int k, int n, int max_level, const ClosureOptions& options = {});

struct CoverCertificate {
  int k = 0;
  int n = 0;
  int level = 0;
  Integer grid_denominator;
  std::vector<GoodTranslate> family;
  Rational sum_constants;
  std::size_t count = 0;
  Rational derived_constant;
  std::size_t cells_checked = 0;
};

struct CoverResult {
  std::optional<CoverCertificate> certificate;
  std::string failure;
};

/// Greedy cover of the grid cells at `level` by good translates of that
/// level. Each cell must fit inside one chosen translate, checked exactly on
/// its vertices and barycenter. Fails when the translates do not cover T or
/// when |A| >= n^{level(k+1)}.
CoverResult find_cover(const GoodClosure& closure, int level);

/// Tries levels 1..max_level and returns the first certificate.
struct CoverSearch {
  GoodClosure closure;
  std::optional<CoverCertificate> certificate;
  std::vector<std::pair<int, std::string>> attempts;
};
CoverSearch search_cover(int k, int n, int max_level, const ClosureOptions& options = {});

/// The C(n,k) translates (kT + v)/n, v in B_{k,n-k}.
std::vector<std::pair<SimplexGeom, Composition>> scaled_simplex_cover(int k, int n);

/// Every lattice point of resolution n*k lies in some translate; checked with
/// exact containment.
bool scaled_simplex_cover_verified(int k, int n);

}  // namespace supconv
