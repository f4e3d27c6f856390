#include "gen.hpp"
#include "oracles.hpp"

#include "supconv/envelope.hpp"
#include "supconv/error.hpp"
#include "supconv/generators.hpp"
#include "supconv/sup_convolution.hpp"

#include <doctest.h>

using namespace supconv;

TEST_CASE("sup-convolution examples") {
  const SampledFunction f = make_extremal(1, 4);
  CHECK(sup_convolve_n(f, 1) == f);
  // Lattice order is (0,4), (1,3), (2,2), (3,1), (4,0).
  const auto half = make_rational(-1, 2);
  CHECK(sup_convolve_n(f, 2).values() == RationalVector{0, half, 0, half, 0});

  const SampledFunction e = make_extremal(1, 2);
  CHECK(sup_convolve_pair(e, e).values() == RationalVector{0, 0, 0});
  const SampledFunction zero(e.lattice(), Rational(0));
  CHECK(sup_convolve_pair(e, zero)[1] == 0);
  CHECK_THROWS_AS(sup_convolve_pair(e, make_extremal(1, 4)), Error);
}

TEST_CASE("dynamic program tables") {
  const SampledFunction f = make_extremal(2, 2);
  const auto tables = sup_convolution_tables(f, 3);
  REQUIRE(tables.size() == 3);
  CHECK(tables[0].best == f.values());
  for (std::size_t j = 1; j < tables.size(); ++j) {
    const auto states = enumerate_compositions(static_cast<int>(j + 1) * 2, 3);
    for (const auto& w : states) {
      bool attained = false;
      for (std::size_t x = 0; x < f.size(); ++x) {
        Composition rest = w;
        bool ok = true;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          rest[i] -= f.lattice().composition(x)[i];
          ok = ok && rest[i] >= 0;
        }
        if (!ok) continue;
        const Rational candidate = tables[j - 1].at(rest) + f[x];
        CHECK(tables[j].at(w) >= candidate);
        attained = attained || tables[j].at(w) == candidate;
      }
      CHECK(attained);
    }
  }
}

TEST_CASE("dynamic program agrees with exhaustive tuples") {
  SplitMix64 rng(31);
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= 3; ++n)
      for (int res = 1; res <= 4; ++res) {
        const SampledFunction f = gen::function(rng, k, res);
        CHECK(sup_convolve_n(f, n).values() == oracle::brute_sup_convolve(f, n));
        const SampledFunction g = gen::function(rng, k, res);
        CHECK(sup_convolve_pair(f, g).values() == oracle::brute_pair(f, g));
      }
}

TEST_CASE("sandwich, equivariance, scaling, symmetry") {
  SplitMix64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int k = gen::between(rng, 1, 2);
    const int n = gen::between(rng, 2, 3);
    const int res = gen::between(rng, 1, 8);
    const SampledFunction f = gen::function(rng, k, res);
    const SampledFunction conv = sup_convolve_n(f, n);
    CHECK(pointwise_leq(f, conv));
    CHECK(pointwise_leq(conv, concave_envelope(f).envelope));
    if (t % 2 == 0) {
      const SampledFunction a = SampledFunction::affine(f.lattice(), gen::vector(rng, k + 1));
      CHECK(sup_convolve_n(f + a, n) == conv + a);
      const Rational lambda = abs(gen::small_rational(rng));
      CHECK(sup_convolve_n(f.scaled(lambda), n) == conv.scaled(lambda));
      const SampledFunction g = gen::function(rng, k, res);
      CHECK(sup_convolve_pair(f, g) == sup_convolve_pair(g, f));
    }
  }
}
