#include "gen.hpp"
#include "oracles.hpp"

#include "supconv/error.hpp"
#include "supconv/generators.hpp"
#include "supconv/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace supconv;

namespace {

BaryPoint pt(std::initializer_list<Rational> c) { return BaryPoint(RationalVector(c)); }

Rational half() { return make_rational(1, 2); }

std::vector<BaryPoint> random_simplex(SplitMix64& rng, int k) {
  while (true) {
    std::vector<BaryPoint> verts;
    for (int i = 0; i <= k; ++i) verts.push_back(random_point(k, rng, 40));
    std::vector<RationalVector> raw;
    for (const auto& v : verts) raw.push_back(v.coords());
    if (oracle::relative_volume(raw) != 0) return verts;
  }
}

}  // namespace

TEST_CASE("relative volume examples") {
  CHECK(relative_volume(SimplexGeom::standard(2)) == 1);
  CHECK(relative_volume(SimplexGeom::standard(5)) == 1);
  const SimplexGeom corner({pt({1, 0, 0}), pt({half(), half(), 0}), pt({half(), 0, half()})});
  CHECK(relative_volume(corner) == make_rational(1, 4));
  const SimplexGeom medial({pt({half(), half(), 0}), pt({0, half(), half()}), pt({half(), 0, half()})});
  CHECK(relative_volume(medial) == make_rational(1, 4));
  CHECK(signed_relative_volume(medial) == make_rational(1, 4));
  CHECK(signed_relative_volume(SimplexGeom({pt({0, 1, 0}), pt({1, 0, 0}), pt({0, 0, 1})})) == -1);
}

TEST_CASE("relative volume is invariant under coordinate permutations") {
  SplitMix64 rng(3);
  for (int k = 1; k <= 3; ++k) {
    for (int t = 0; t < 5; ++t) {
      const auto verts = random_simplex(rng, k);
      const SimplexGeom s(verts);
      const Rational reference = relative_volume(s);
      std::vector<RationalVector> raw;
      for (const auto& v : verts) raw.push_back(v.coords());
      CHECK(reference == oracle::relative_volume(raw));
      std::vector<std::size_t> perm(static_cast<std::size_t>(k) + 1);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<BaryPoint> permuted;
        for (const auto& v : verts) {
          RationalVector c(v.coords().size());
          for (std::size_t j = 0; j < c.size(); ++j) c[j] = v[perm[j]];
          permuted.emplace_back(c);
        }
        CHECK(relative_volume(SimplexGeom(permuted)) == reference);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("containment") {
  const SimplexGeom t = SimplexGeom::standard(2);
  CHECK(contains(t, BaryPoint::barycenter(2)));
  CHECK(contains_interior(t, BaryPoint::barycenter(2)));
  CHECK_FALSE(contains(t, pt({make_rational(3, 2), -half(), 0})));
  CHECK(contains(t, BaryPoint::vertex(2, 1)));
  CHECK_FALSE(contains_interior(t, BaryPoint::vertex(2, 1)));
  const SimplexGeom corner({pt({1, 0, 0}), pt({half(), half(), 0}), pt({half(), 0, half()})});
  CHECK(contains(corner, pt({make_rational(3, 4), make_rational(1, 8), make_rational(1, 8)})));
  const auto w = barycentric_coordinates(corner, pt({make_rational(3, 4), make_rational(1, 8), make_rational(1, 8)}));
  CHECK(w == RationalVector{half(), make_rational(1, 4), make_rational(1, 4)});
}

TEST_CASE("simplex validation") {
  CHECK_THROWS_AS(SimplexGeom({pt({1, 0, 0}), pt({0, 1, 0}), pt({half(), half(), 0})}), Error);
  CHECK_THROWS_AS(SimplexGeom({pt({1, 0, 0}), pt({0, 1, 0})}), Error);
  CHECK_THROWS_AS(SimplexGeom({pt({1, 0, 0}), pt({0, 2, 0}), pt({0, 0, 1})}), Error);
}

TEST_CASE("interior intersection") {
  const SimplexGeom t = SimplexGeom::standard(2);
  const SimplexGeom corner({pt({1, 0, 0}), pt({half(), half(), 0}), pt({half(), 0, half()})});
  const SimplexGeom medial({pt({half(), half(), 0}), pt({0, half(), half()}), pt({half(), 0, half()})});
  const auto witness = common_interior_point(t, corner);
  REQUIRE(witness.has_value());
  CHECK(contains_interior(t, *witness));
  CHECK(contains_interior(corner, *witness));
  CHECK_FALSE(common_interior_point(corner, medial).has_value());
}

TEST_CASE("lattices") {
  const BaryLattice l12(1, 2);
  REQUIRE(l12.size() == 3);
  CHECK(l12.composition(0) == Composition{0, 2});
  CHECK(l12.composition(1) == Composition{1, 1});
  CHECK(l12.composition(2) == Composition{2, 0});
  CHECK(l12.point(1) == pt({half(), half()}));
  CHECK(BaryLattice(2, 2).size() == 6);
  CHECK(BaryLattice(3, 4).size() == 35);
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 12; ++n) {
      const BaryLattice lat(k, n);
      CHECK(Integer(static_cast<unsigned long>(lat.size())) == binomial(n + k, k));
      CHECK(composition_count(n, k + 1) == lat.size());
      for (std::size_t i = 0; i < lat.size(); ++i) {
        CHECK(lat.index_of(lat.composition(i)) == i);
        CHECK(composition_rank(lat.composition(i)) == i);
        if (k <= 2 && n <= 6) CHECK(contains(SimplexGeom::standard(k), lat.point(i)));
      }
      for (std::size_t i = 1; i < lat.size(); ++i) CHECK(lat.composition(i - 1) < lat.composition(i));
    }
  const auto verts = BaryLattice(2, 3).vertex_indices();
  REQUIRE(verts.size() == 3);
  CHECK(BaryLattice(2, 3).composition(verts[0]) == Composition{3, 0, 0});
  CHECK_THROWS_AS(BaryLattice(7, 2), Error);
  CHECK_THROWS_AS(BaryLattice(0, 2), Error);
}
