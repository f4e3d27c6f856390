#pragma once

#include "supconv/linalg.hpp"
#include "supconv/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace supconv {

/// maximize c.x  subject to  A x = b,  x >= 0.
struct LinearProgram {
  Matrix a;
  RationalVector b;
  RationalVector c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector x;
  Rational value;
  // Column indices of the final basis, one per surviving row.
  std::vector<std::size_t> basis;
};

/// Exact dense-tableau simplex with Bland's rule (no cycling). When
/// `initial_basis` is supplied it must be primal feasible; phase one is then
/// skipped.
LpResult maximize(const LinearProgram& lp,
                  const std::optional<std::vector<std::size_t>>& initial_basis = std::nullopt);

}  // namespace supconv
