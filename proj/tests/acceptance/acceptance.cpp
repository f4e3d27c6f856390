// One line per acceptance criterion: "criterion <i> PASS|FAIL <seconds>s <detail>".

#include "oracles.hpp"

#include "supconv/averageable.hpp"
#include "supconv/combinatorics.hpp"
#include "supconv/cover.hpp"
#include "supconv/envelope.hpp"
#include "supconv/generators.hpp"
#include "supconv/harness.hpp"
#include "supconv/subdivision.hpp"
#include "supconv/sup_convolution.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace supconv;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && first_failure_.empty()) first_failure_ = what;
    failures_ += cond ? 0 : 1;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed, first: " + first_failure_};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

std::string kn(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

Outcome constants() {
  Tally t;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 12; ++n) {
      const ConstantReport c = constant_c(k, n);
      const Rational closed = sharp_constant_closed_form(k, n);
      t.expect(closed == c.c_hypersimplex_sum, "closed form vs hypersimplex sum at " + kn(k, n));
      t.expect(closed == c.c_power_sum, "closed form vs power sum at " + kn(k, n));
      t.expect(closed == extremal_profile(k, n).ratio, "closed form vs extremal ratio at " + kn(k, n));
    }
  t.expect(constant_c(1, 2).value() == make_rational(1, 2), "c_{1,2} = 1/2");
  t.expect(constant_c(2, 3).value() == make_rational(5, 9), "c_{2,3} = 5/9");
  t.expect(constant_c(3, 2).value() == make_rational(1, 4), "c_{3,2} = 1/4");
  return t.outcome("c_{1,2}=1/2, c_{2,3}=5/9, c_{3,2}=1/4, all forms equal");
}

Outcome worpitzky() {
  Tally t;
  for (int k = 1; k <= 6; ++k)
    for (int n = 1; n <= 12; ++n) t.expect(worpitzky_check(k, n), "Worpitzky at " + kn(k, n));
  const auto cells = subdivide(2, 4);
  const auto up = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.m == 1; });
  const auto down = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.m == 2; });
  t.expect(up == 10 && down == 6 && up + down == 16, "n=4 triangle counts");
  return t.outcome("exact for k<=6, n<=12; n=4 triangle 10 + 6 = 16");
}

Outcome subdivision() {
  Tally t;
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n) {
      const auto cells = subdivide(k, n);
      Rational total = 0;
      for (const auto& c : cells) total += cell_relative_volume(k, n, c);
      t.expect(total == 1, "volumes sum to 1 at " + kn(k, n));
      for (int m = 1; m <= std::min(k, n); ++m) {
        const auto count = std::count_if(cells.begin(), cells.end(), [&](const auto& c) { return c.m == m; });
        t.expect(Integer(static_cast<long>(count)) == binomial(n + k - m, k), "cell count at " + kn(k, n));
      }
    }
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= 4; ++n) {
      const BaryLattice lat(k, 2 * n);
      for (std::size_t i = 0; i < lat.size(); ++i) {
        const BaryPoint z = lat.point(i);
        const Classification c = classify_point(k, n, z);
        const int usage = oracle::vertex_usage(n, z.coords());
        t.expect(c.vertex_usage == usage, "vertex usage at " + kn(k, n));
        t.expect(cell_contains(n, SubdivisionCell{c.m, c.v, {}}, z), "classified cell contains point at " + kn(k, n));
        if (!c.on_boundary) t.expect(c.m == n - usage, "interior m at " + kn(k, n));
      }
    }
  return t.outcome("counts C(n+k-m,k), volumes sum to 1, classify matches the vertex-usage oracle");
}

Outcome extremal() {
  Tally t;
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 6; ++n)
      t.expect(extremal_profile(k, n).ratio == constant_c(k, n).value(), "analytic ratio at " + kn(k, n));
  for (int k = 1; k <= 2; ++k)
    for (int n = 2; n <= 4; ++n) {
      const CellAccounting a = cell_accounting_n_fold(make_extremal(k, 12), n);
      t.expect(a.ratio.has_value() && *a.ratio == constant_c(k, n).value(), "grid ratio at " + kn(k, n));
    }
  return t.outcome("analytic ratio = c_{k,n} for k<=3, n<=6; grid pipeline exact for k<=2, n<=4 at N=12");
}

Outcome averageable() {
  Tally t;
  FunctionalCheckOptions options;
  const std::pair<int, int> cases[] = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  for (const auto& [k, m] : cases) {
    const AverageabilityCertificate cert = build_maps(k, m);
    const VerificationReport r = verify_certificate(cert, options);
    std::string failed;
    for (const auto& c : r.checks)
      if (!c.passed) failed += " " + c.name;
    t.expect(r.passed, "certificate (" + std::to_string(k) + "," + std::to_string(m) + "):" + failed);
  }
  const VerificationReport medial = verify_certificate(build_medial_example(), options);
  t.expect(medial.passed, "medial example");
  const AverageabilityCertificate octa = build_maps(3, 2);
  t.expect(octa.jacobian == make_rational(1, 2), "octahedron jacobian 1/2");
  t.expect(octa.image_pieces.size() == 4, "octahedron has four image pieces");
  for (const auto& s : octa.image_pieces) t.expect(relative_volume(s) == make_rational(1, 8), "image piece volume 1/8");
  return t.outcome("six certificates and the medial example verify; (3,2) jacobian 1/2, four pieces of 1/8");
}

Outcome pair_inequality() {
  Tally t;
  for (int k = 1; k <= 3; ++k) {
    t.expect(extremal_profile(k, 2).ratio == pair_constant(k), "analytic pair ratio at k=" + std::to_string(k));
    const SampledFunction e = make_extremal(k, 2 * (k + 1));
    const CellAccounting a = cell_accounting_pair(e, e);
    t.expect(a.ratio.has_value() && *a.ratio == pair_constant(k), "grid pair ratio at k=" + std::to_string(k));
  }
  Tolerance tol;
  int passed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 2;
    const SampledFunction f = make_random(k, 12, 1000 + 2 * static_cast<std::uint64_t>(trial), 0.6);
    const SampledFunction g = make_random(k, 12, 1001 + 2 * static_cast<std::uint64_t>(trial), 0.6);
    const InequalityReport r = verify_pair(f, g, tol);
    t.expect(r.passed(), "random pair trial " + std::to_string(trial));
    passed += r.passed() ? 1 : 0;
  }
  return t.outcome("ratio (k+1)/2^{k+1} exact for k<=3; " + std::to_string(passed) + "/100 random pairs pass at tol_rel=1/20");
}

Outcome covering() {
  Tally t;
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 1; n <= 50; ++n) {
      const Rational bound = asymptotic_bound(k, n);
      const Rational c = constant_c(k, n).value();
      t.expect(bound <= c, "bound below constant at " + kn(k, n));
      t.expect((bound == c) == (k == 1), "equality exactly for k=1 at " + kn(k, n));
    }
  for (int k = 1; k <= 3; ++k)
    for (int n = k + 1; n <= 8; ++n) t.expect(scaled_simplex_cover_verified(k, n), "covering at " + kn(k, n));
  return t.outcome("bound <= c_{k,n} for k<=3, n<=50 with equality iff k=1; coverings verified for n<=8");
}

Outcome appendix_cover() {
  Tally t;
  const CoverResult r = find_cover(closure_good(1, 2, 1), 1);
  t.expect(r.certificate.has_value(), "k=1 n=2 level 1 certificate exists");
  if (r.certificate) {
    t.expect(r.certificate->count == 2, "|A| = 2");
    t.expect(r.certificate->sum_constants == 2, "sum C = 2");
    t.expect(r.certificate->derived_constant == make_rational(1, 4), "derived constant 1/4");
  }
  const auto start = std::chrono::steady_clock::now();
  const CoverSearch s = search_cover(2, 2, 3);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(s.certificate.has_value() && s.certificate->derived_constant > 0, "k=2 n=2 positive constant");
  t.expect(seconds < 60, "k=2 n=2 search under 60 s");
  std::string snapshot = "none";
  if (s.certificate) {
    t.expect(s.certificate->level == 1 && s.certificate->count == 6 && s.certificate->sum_constants == 9 &&
                 s.certificate->derived_constant == make_rational(1, 36),
             "k=2 n=2 snapshot (level 1, |A|=6, sum C=9, 1/36)");
    snapshot = "level " + std::to_string(s.certificate->level) + ", |A|=" + std::to_string(s.certificate->count) +
               ", sum C=" + to_string(s.certificate->sum_constants) + ", constant " +
               to_string(s.certificate->derived_constant);
  }
  return t.outcome("k=1 n=2: |A|=2, sum C=2, 1/4; k=2 n=2: " + snapshot);
}

Outcome properties() {
  Tally t;
  Tolerance tol;
  int passed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 2;
    const int n = 2 + (trial / 2) % 2;
    const SampledFunction f = make_random(k, 12, 7 + static_cast<std::uint64_t>(trial), 0.5);
    const InequalityReport r = verify_n_fold(f, n, tol);
    t.expect(r.passed(), "random n-fold trial " + std::to_string(trial));
    passed += r.passed() ? 1 : 0;
    const SampledFunction conv = sup_convolve_n(f, n);
    const SampledFunction co = concave_envelope(f).envelope;
    t.expect(pointwise_leq(f, conv) && pointwise_leq(conv, co), "sandwich on trial " + std::to_string(trial));
  }
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + trial % 2;
    const int n = 2 + (trial / 2) % 2;
    const SampledFunction f = make_random(k, 8, 500 + static_cast<std::uint64_t>(trial), 0.7);
    RationalVector vertex_values;
    for (int i = 0; i <= k; ++i) vertex_values.push_back(make_rational(static_cast<long>(rng.below(41)) - 20, 1 + static_cast<long>(rng.below(6))));
    const SampledFunction a = SampledFunction::affine(f.lattice(), vertex_values);
    const SampledFunction conv = sup_convolve_n(f, n);
    t.expect(sup_convolve_n(f + a, n) == conv + a, "affine equivariance of f^{*n}");
    t.expect(concave_envelope(f + a).envelope == concave_envelope(f).envelope + a, "affine equivariance of co(f)");
    const Rational lambda = make_rational(static_cast<long>(rng.below(20)), 1 + static_cast<long>(rng.below(6)));
    t.expect(sup_convolve_n(f.scaled(lambda), n) == conv.scaled(lambda), "scaling of f^{*n}");
    t.expect(concave_envelope(f.scaled(lambda)).envelope == concave_envelope(f).envelope.scaled(lambda), "scaling of co(f)");
  }
  return t.outcome(std::to_string(passed) + "/200 random functions pass; sandwich, equivariance and scaling exact");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, 1, constants},   {2, 1, worpitzky},        {3, 30, subdivision}, {4, 120, extremal},   {5, 10, averageable},
      {6, 300, pair_inequality}, {7, 30, covering}, {8, 60, appendix_cover}, {9, 600, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      o.passed = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    std::printf("criterion %d %s %.3fs %s\n", c.id, o.passed ? "PASS" : "FAIL", seconds, o.detail.c_str());
    std::fflush(stdout);
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
