#include "supconv/envelope.hpp"

#include "supconv/error.hpp"
#include "supconv/lp.hpp"

#include <algorithm>

namespace supconv {

namespace {

// An optimal simplex basis of the envelope LP. Reduced costs do not depend
// on the right-hand side, so the basis stays optimal for every query point
// whose basic weights B^{-1} z are non-negative: a cell of the upper hull.
struct HullCell {
  std::vector<std::size_t> basis;
  Matrix inverse;
};

std::optional<std::vector<SupportPoint>> solve_in_cell(const HullCell& cell, const RationalVector& target) {
  const RationalVector weights = cell.inverse * target;
  std::vector<SupportPoint> support;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) return std::nullopt;
    if (weights[i] > 0) support.push_back({cell.basis[i], weights[i]});
  }
  return support;
}

}  // namespace

EnvelopeResult concave_envelope(const SampledFunction& f) {
  const BaryLattice& lat = f.lattice();
  const std::size_t rows = static_cast<std::size_t>(lat.dim()) + 1;
  const std::size_t cols = lat.size();

  // Columns are the integer lattice vectors N*p; weights are unchanged by
  // the common scaling of both sides.
  LinearProgram lp;
  lp.a = Matrix(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) lp.a(i, j) = lat.composition(j)[i];
  lp.c = f.values();
  const std::vector<std::size_t> vertex_basis = lat.vertex_indices();

  std::vector<HullCell> cells;
  RationalVector values(cols);
  std::vector<std::vector<SupportPoint>> certificates(cols);

  for (std::size_t q = 0; q < cols; ++q) {
    RationalVector target(rows);
    for (std::size_t i = 0; i < rows; ++i) target[i] = lat.composition(q)[i];

    std::optional<std::vector<SupportPoint>> support;
    for (auto it = cells.rbegin(); it != cells.rend() && !support; ++it) {
      support = solve_in_cell(*it, target);
    }
    if (!support) {
      lp.b = target;
      // The vertices of T always form a feasible starting basis.
      const LpResult res = maximize(lp, vertex_basis);
      require(res.status == LpStatus::Optimal, ErrorKind::DegenerateInput, "envelope LP did not reach an optimum");
      HullCell cell;
      cell.basis = res.basis;
      Matrix basis_matrix(rows, rows);
      for (std::size_t c = 0; c < rows; ++c)
        for (std::size_t r = 0; r < rows; ++r) basis_matrix(r, c) = lp.a(r, cell.basis[c]);
      auto inv = inverse(basis_matrix);
      require(inv.has_value(), ErrorKind::DegenerateInput, "envelope basis is singular");
      cell.inverse = std::move(*inv);
      support = solve_in_cell(cell, target);
      cells.push_back(std::move(cell));
    }

    Rational value;
    for (const auto& s : *support) value += s.weight * f[s.index];
    values[q] = std::move(value);
    certificates[q] = std::move(*support);
  }

  return {SampledFunction(lat, std::move(values)), std::move(certificates)};
}

bool certificates_valid(const SampledFunction& f, const EnvelopeResult& result) {
  const BaryLattice& lat = f.lattice();
  if (result.certificates.size() != lat.size()) return false;
  const std::size_t width = static_cast<std::size_t>(lat.dim()) + 1;
  for (std::size_t q = 0; q < lat.size(); ++q) {
    const auto& cert = result.certificates[q];
    if (cert.empty() || cert.size() > width) return false;
    Rational total;
    Rational value;
    RationalVector position(width);
    for (const auto& s : cert) {
      if (s.weight <= 0 || s.index >= lat.size()) return false;
      total += s.weight;
      value += s.weight * f[s.index];
      for (std::size_t i = 0; i < width; ++i) position[i] += s.weight * lat.composition(s.index)[i];
    }
    if (total != 1 || value != result.envelope[q]) return false;
    for (std::size_t i = 0; i < width; ++i) {
      if (position[i] != lat.composition(q)[i]) return false;
    }
  }
  return true;
}

SampledFunction normalize_to_simplex_form(const SampledFunction& f) {
  // A vertex of T is an extreme point, so co(f) = f there.
  RationalVector vertex_values;
  for (std::size_t idx : f.lattice().vertex_indices()) vertex_values.push_back(f[idx]);
  return f - SampledFunction::affine(f.lattice(), vertex_values);
}

}  // namespace supconv
