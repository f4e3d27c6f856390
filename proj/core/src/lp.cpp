#include "supconv/lp.hpp"

#include "supconv/error.hpp"

#include <algorithm>

namespace supconv {

namespace {

class Tableau {
 public:
  Tableau(const Matrix& a, const RationalVector& b)
      : rows_(a.rows()), cols_(a.cols()), t_(rows_, RationalVector(cols_ + 1)) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j] = a(i, j);
      t_[i][cols_] = b[i];
    }
    basis_.assign(rows_, 0);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  const Rational& rhs(std::size_t r) const { return t_[r][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    for (auto& x : t_[row]) x *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || t_[r][col] == 0) continue;
      const Rational factor = t_[r][col];
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (t_[row][c] != 0) t_[r][c] -= factor * t_[row][c];
      }
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

  // Runs Bland's-rule simplex for `cost` restricted to columns < `allowed`.
  // Returns false on unboundedness.
  bool optimize(const RationalVector& cost, std::size_t allowed) {
    std::vector<bool> is_basic(cols_, false);
    for (;;) {
      std::fill(is_basic.begin(), is_basic.end(), false);
      for (auto b : basis_) is_basic[b] = true;

      std::size_t entering = cols_;
      for (std::size_t j = 0; j < allowed && entering == cols_; ++j) {
        if (is_basic[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) {
          if (t_[i][j] != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (reduced > 0) entering = j;
      }
      if (entering == cols_) return true;

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][entering] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][entering];
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_) return false;
      pivot(leaving, entering);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
};

LpResult extract(const Tableau& tab, const RationalVector& c, std::size_t n) {
  LpResult out;
  out.status = LpStatus::Optimal;
  out.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < n) out.x[tab.basis()[i]] = tab.rhs(i);
  }
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  out.basis = tab.basis();
  return out;
}

}  // namespace

LpResult maximize(const LinearProgram& lp, const std::optional<std::vector<std::size_t>>& initial_basis) {
  const std::size_t m = lp.a.rows();
  const std::size_t n = lp.a.cols();
  require(lp.b.size() == m && lp.c.size() == n, ErrorKind::InvalidInput, "LP shape mismatch");

  if (initial_basis) {
    require(initial_basis->size() == m, ErrorKind::InvalidInput, "initial basis has wrong size");
    Tableau tab(lp.a, lp.b);
    std::vector<bool> assigned(m, false);
    for (std::size_t col : *initial_basis) {
      std::size_t row = m;
      for (std::size_t r = 0; r < m && row == m; ++r) {
        if (!assigned[r] && tab.at(r, col) != 0) row = r;
      }
      require(row != m, ErrorKind::InvalidInput, "initial basis is singular");
      tab.pivot(row, col);
      assigned[row] = true;
    }
    for (std::size_t r = 0; r < m; ++r) {
      require(tab.rhs(r) >= 0, ErrorKind::InvalidInput, "initial basis is not feasible");
    }
    LpResult res;
    if (!tab.optimize(lp.c, n)) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    return extract(tab, lp.c, n);
  }

  // Phase one: artificial identity block, maximize -(sum of artificials).
  Matrix a(m, n + m);
  RationalVector b = lp.b;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    if (flip) b[i] = -b[i];
    for (std::size_t j = 0; j < n; ++j) a(i, j) = flip ? Rational(-lp.a(i, j)) : lp.a(i, j);
    a(i, n + i) = 1;
  }
  Tableau tab(a, b);
  for (std::size_t i = 0; i < m; ++i) tab.basis()[i] = n + i;
  RationalVector phase1_cost(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[n + i] = -1;
  tab.optimize(phase1_cost, n + m);

  Rational infeasibility;
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] >= n) infeasibility += tab.rhs(i);
  }
  if (infeasibility != 0) return {};

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent and get dropped.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n && col == n; ++j) {
      if (tab.at(i, j) != 0) col = j;
    }
    if (col == n) {
      tab.drop_row(i);
    } else {
      tab.pivot(i, col);
      ++i;
    }
  }

  RationalVector cost(n + m);
  std::copy(lp.c.begin(), lp.c.end(), cost.begin());
  LpResult res;
  if (!tab.optimize(cost, n)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  return extract(tab, lp.c, n);
}

}  // namespace supconv
