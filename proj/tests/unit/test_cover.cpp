#include "supconv/combinatorics.hpp"
#include "supconv/cover.hpp"
#include "supconv/error.hpp"

#include <doctest.h>

using namespace supconv;

TEST_CASE("closure of good translates") {
  const GoodClosure g = closure_good(1, 2, 1);
  const auto level0 = g.translates(0);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0].constant == 0);
  const auto level1 = g.translates(1);
  std::vector<RationalVector> offsets;
  for (const auto& t : level1) {
    if (t.constant == 1) offsets.push_back(t.offset_point());
    CHECK(contains(SimplexGeom::standard(1), BaryPoint(t.simplex(2).vertex(0))));
  }
  // Vertex-rule translates [0,1/2] and [1/2,1]: offsets (0,1/2) and (1/2,0).
  CHECK(std::find(offsets.begin(), offsets.end(), RationalVector{0, make_rational(1, 2)}) != offsets.end());
  CHECK(std::find(offsets.begin(), offsets.end(), RationalVector{make_rational(1, 2), 0}) != offsets.end());

  const GoodClosure g2 = closure_good(2, 2, 1);
  int corners = 0;
  for (const auto& t : g2.translates(1)) {
    for (int i = 0; i < 3; ++i) {
      RationalVector corner(3, Rational(0));
      corner[static_cast<std::size_t>(i)] = make_rational(1, 2);
      corners += t.offset_point() == corner && t.constant == 1 ? 1 : 0;
    }
  }
  CHECK(corners == 3);
}

TEST_CASE("closure constants replay from their derivations") {
  for (int k = 1; k <= 2; ++k) {
    const GoodClosure g = closure_good(k, 2, 2);
    for (std::size_t level = 0; level < g.best.size(); ++level)
      for (const auto& t : g.translates(static_cast<int>(level))) {
        CHECK(g.replay(t.node) == t.constant);
        CHECK(t.constant >= 0);
        CHECK(g.trace(t.node).back() == t.node);
        const SimplexGeom s = t.simplex(2);
        for (const auto& v : s.vertices()) CHECK(contains(SimplexGeom::standard(k), v));
      }
  }
}

TEST_CASE("cover certificates") {
  const GoodClosure g = closure_good(1, 2, 1);
  const CoverResult r = find_cover(g, 1);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->count == 2);
  CHECK(r.certificate->sum_constants == 2);
  CHECK(r.certificate->derived_constant == make_rational(1, 4));
  CHECK(r.certificate->derived_constant <= constant_c(1, 2).value());

  const CoverResult r0 = find_cover(g, 0);
  CHECK_FALSE(r0.certificate.has_value());
  CHECK_FALSE(r0.failure.empty());

  const CoverSearch s = search_cover(2, 2, 2);
  REQUIRE(s.certificate.has_value());
  CHECK(s.certificate->derived_constant > 0);
  CHECK(s.certificate->derived_constant < constant_c(2, 2).value());
  // Regression snapshot.
  CHECK(s.certificate->level == 1);
  CHECK(s.certificate->count == 6);
  CHECK(s.certificate->sum_constants == 9);
  CHECK(s.certificate->derived_constant == make_rational(1, 36));
}

TEST_CASE("node budget truncates") {
  ClosureOptions options;
  options.node_budget = 5;
  const GoodClosure g = closure_good(2, 2, 3, options);
  CHECK(g.truncated);
  CHECK(g.nodes.size() <= 5);
}

TEST_CASE("covering by (kT + v)/n") {
  CHECK(scaled_simplex_cover(1, 2).size() == 2);
  CHECK(scaled_simplex_cover(2, 3).size() == 3);
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 1; n <= 8; ++n) {
      CHECK(Integer(static_cast<long>(scaled_simplex_cover(k, n).size())) == binomial(n, k));
      CHECK(scaled_simplex_cover_verified(k, n));
    }
  CHECK_THROWS_AS(scaled_simplex_cover(3, 3), Error);
}
