#include "supconv/sup_convolution.hpp"

#include "supconv/error.hpp"

#include <string>

namespace supconv {

const Rational& SupConvTable::at(std::span<const int> w) const {
  require(w.size() == static_cast<std::size_t>(dim) + 1, ErrorKind::InvalidInput, "table lookup: wrong dimension");
  int sum = 0;
  for (int x : w) {
    require(x >= 0, ErrorKind::InvalidInput, "table lookup: negative coordinate");
    sum += x;
  }
  require(sum == stage * resolution, ErrorKind::InvalidInput, "table lookup: state not in this stage");
  return best[composition_rank(w)];
}

namespace {

SupConvTable next_stage(const SupConvTable& prev, const SampledFunction& f) {
  const int parts = prev.dim + 1;
  const BaryLattice& lat = f.lattice();
  SupConvTable next;
  next.stage = prev.stage + 1;
  next.dim = prev.dim;
  next.resolution = prev.resolution;
  const auto states = enumerate_compositions(next.stage * next.resolution, parts);
  next.best.resize(states.size());
  std::vector<bool> seen(states.size(), false);

  const auto prev_states = enumerate_compositions(prev.stage * prev.resolution, parts);
  Composition w(static_cast<std::size_t>(parts));
  Rational candidate;
  for (std::size_t u = 0; u < prev_states.size(); ++u) {
    for (std::size_t x = 0; x < lat.size(); ++x) {
      const auto& xc = lat.composition(x);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = prev_states[u][i] + xc[i];
      const std::size_t idx = composition_rank(w);
      candidate = prev.best[u] + f[x];
      if (!seen[idx] || candidate > next.best[idx]) {
        next.best[idx] = candidate;
        seen[idx] = true;
      }
    }
  }
  return next;
}

}  // namespace

std::vector<SupConvTable> sup_convolution_tables(const SampledFunction& f, int n) {
  require(n >= 1, ErrorKind::InvalidInput, "sup-convolution order must be >= 1, got " + std::to_string(n));
  std::vector<SupConvTable> tables;
  tables.push_back({1, f.dim(), f.resolution(), f.values()});
  for (int j = 2; j <= n; ++j) tables.push_back(next_stage(tables.back(), f));
  return tables;
}

SampledFunction sup_convolve_n(const SampledFunction& f, int n) {
  require(n >= 1, ErrorKind::InvalidInput, "sup-convolution order must be >= 1, got " + std::to_string(n));
  if (n == 1) return f;
  SupConvTable table{1, f.dim(), f.resolution(), f.values()};
  for (int j = 2; j <= n; ++j) table = next_stage(table, f);

  const BaryLattice& lat = f.lattice();
  RationalVector out;
  out.reserve(lat.size());
  Composition w(static_cast<std::size_t>(f.dim()) + 1);
  for (const auto& c : lat.compositions()) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = n * c[i];
    out.push_back(table.best[composition_rank(w)] / n);
  }
  return SampledFunction(lat, std::move(out));
}

SampledFunction sup_convolve_pair(const SampledFunction& f, const SampledFunction& g) {
  require(f.lattice() == g.lattice(), ErrorKind::InvalidInput, "sup_convolve_pair: lattice mismatch");
  const BaryLattice& lat = f.lattice();
  RationalVector out;
  out.reserve(lat.size());
  Composition y(static_cast<std::size_t>(lat.dim()) + 1);
  for (const auto& z : lat.compositions()) {
    Rational best;
    bool have = false;
    for (std::size_t x = 0; x < lat.size(); ++x) {
      const auto& xc = lat.composition(x);
      bool feasible = true;
      for (std::size_t i = 0; i < y.size() && feasible; ++i) {
        y[i] = 2 * z[i] - xc[i];
        feasible = y[i] >= 0;
      }
      if (!feasible) continue;
      Rational candidate = f[x] + g.at(y);
      if (!have || candidate > best) {
        best = std::move(candidate);
        have = true;
      }
    }
    out.push_back(best / 2);
  }
  return SampledFunction(lat, std::move(out));
}

}  // namespace supconv
