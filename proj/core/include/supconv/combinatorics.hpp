#pragma once

#include "supconv/rational.hpp"

#include <optional>

namespace supconv {

/// Number of permutations of {1..k} with exactly `descents` descents.
/// Computed from the standard recurrence; valid for 1 <= k <= 20.
Integer eulerian(int k, int descents);

/// Every closed form available for the sharp constant c_{k,n}.
struct ConstantReport {
  int k = 0;
  int n = 0;
  // Piecewise closed form proven sharp for k <= 3.
  std::optional<Rational> c_sharp;
  // (1/n^k) * sum_m ((n-m)/n) * C(n+k-m, k) * A(k, m-1)
  Rational c_hypersimplex_sum;
  // (k+1)/n^{k+1} * (1^k + ... + (n-1)^k)
  Rational c_power_sum;
  // 1 - C(n,k) k^{k+1} / n^{k+1}, only for n >= k+1.
  std::optional<Rational> asymptotic_lower;

  const Rational& value() const { return c_hypersimplex_sum; }
  bool conjectural() const { return !c_sharp.has_value(); }
};

Rational sharp_constant_closed_form(int k, int n);  // k in {1,2,3}
Rational constant_hypersimplex_sum(int k, int n);
Rational constant_power_sum(int k, int n);

/// Computes all applicable forms and checks that they agree; a disagreement
/// throws std::logic_error since it can only mean an implementation bug.
ConstantReport constant_c(int k, int n);

/// n^k == sum_{m=1}^{k} C(n+k-m, k) A(k, m-1).
bool worpitzky_check(int k, int n);

/// 1 - C(n,k) k^{k+1} / n^{k+1}; may be negative. Requires n >= k+1.
Rational asymptotic_bound(int k, int n);

/// (k+1)/2^{k+1}, the two-function constant.
Rational pair_constant(int k);

}  // namespace supconv
