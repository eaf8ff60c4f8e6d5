#include "unionbounds/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace unionbounds {

namespace {

// Dense tableau: m constraint rows followed by the reduced-cost row, columns
// for all variables followed by the rhs column. The reduced-cost row keeps
// z[j] = c_j - c_B^T B^{-1} A_j and z[rhs] = -(current objective value).
struct Tableau {
  int m = 0;
  int n = 0;  // columns excluding rhs
  std::vector<std::vector<double>> t;
  std::vector<int> basis;  // basis[r] = column basic in row r

  void pivot(int prow, int pcol) {
    const double piv = t[prow][pcol];
    for (int c = 0; c <= n; ++c) t[prow][c] /= piv;
    t[prow][pcol] = 1.0;
    for (int r = 0; r <= m; ++r) {
      if (r == prow) continue;
      const double f = t[r][pcol];
      if (f == 0.0) continue;
      for (int c = 0; c <= n; ++c) t[r][c] -= f * t[prow][c];
      t[r][pcol] = 0.0;
    }
    basis[prow] = pcol;
  }
};

enum class IterResult { optimal, unbounded };

// Bland's rule: enter the lowest-index improving column; leave by the minimum
// ratio, breaking (near-)ties toward the lowest basic variable index.
IterResult run_simplex(Tableau& tab, const std::vector<bool>& allowed,
                       const LpOptions& opts) {
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    int enter = -1;
    for (int c = 0; c < tab.n; ++c) {
      if (!allowed[c]) continue;
      if (tab.t[tab.m][c] < -opts.pivot_tol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return IterResult::optimal;

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < tab.m; ++r) {
      const double coef = tab.t[r][enter];
      if (coef <= opts.pivot_tol) continue;
      const double ratio = tab.t[r][tab.n] / coef;
      if (leave < 0 || ratio < best_ratio - opts.pivot_tol) {
        leave = r;
        best_ratio = ratio;
      } else if (ratio < best_ratio + opts.pivot_tol &&
                 tab.basis[r] < tab.basis[leave]) {
        leave = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leave < 0) return IterResult::unbounded;
    tab.pivot(leave, enter);
  }
  throw std::runtime_error("simplex iteration limit exceeded");
}

}  // namespace

LpSolution solve(const LinearProgram& lp, const LpOptions& opts) {
  const int n = lp.n_vars();
  if (n < 1) throw std::invalid_argument("LP must have at least one variable");
  for (const auto& c : lp.eq_constraints)
    if (static_cast<int>(c.row.size()) != n)
      throw std::invalid_argument("equality row length mismatch");
  for (const auto& c : lp.ge_constraints)
    if (static_cast<int>(c.row.size()) != n)
      throw std::invalid_argument("inequality row length mismatch");

  const bool maximize = lp.sense == LpSense::maximize;
  std::vector<double> cost(n);
  for (int j = 0; j < n; ++j)
    cost[j] = maximize ? -lp.objective[j] : lp.objective[j];

  const int n_eq = static_cast<int>(lp.eq_constraints.size());
  const int n_ge = static_cast<int>(lp.ge_constraints.size());
  const int m = n_eq + n_ge;

  if (m == 0) {
    // Over x >= 0 the minimum is at the origin unless some cost is negative.
    for (int j = 0; j < n; ++j)
      if (cost[j] < -opts.pivot_tol) return {LpStatus::unbounded, 0.0, {}};
    return {LpStatus::optimal, 0.0, std::vector<double>(n, 0.0)};
  }

  const int n_struct = n + n_ge;       // structural + surplus columns
  const int n_total = n_struct + m;    // + artificial columns

  Tableau tab;
  tab.m = m;
  tab.n = n_total;
  tab.t.assign(m + 1, std::vector<double>(n_total + 1, 0.0));
  tab.basis.assign(m, -1);

  int r = 0;
  for (const auto& c : lp.eq_constraints) {
    for (int j = 0; j < n; ++j) tab.t[r][j] = c.row[j];
    tab.t[r][n_total] = c.rhs;
    ++r;
  }
  for (int g = 0; g < n_ge; ++g) {
    const auto& c = lp.ge_constraints[g];
    for (int j = 0; j < n; ++j) tab.t[r][j] = c.row[j];
    tab.t[r][n + g] = -1.0;  // surplus
    tab.t[r][n_total] = c.rhs;
    ++r;
  }
  for (int i = 0; i < m; ++i) {
    if (tab.t[i][n_total] < 0.0)
      for (int c = 0; c <= n_total; ++c) tab.t[i][c] = -tab.t[i][c];
    tab.t[i][n_struct + i] = 1.0;
    tab.basis[i] = n_struct + i;
  }

  // Phase 1: minimize the sum of artificials, whose reduced costs after
  // pricing out the artificial basis are -(column sums).
  for (int c = 0; c <= n_total; ++c) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += tab.t[i][c];
    const bool artificial = c >= n_struct && c < n_total;
    tab.t[m][c] = artificial ? 1.0 - s : -s;
  }

  std::vector<bool> allowed(n_total, true);
  if (run_simplex(tab, allowed, opts) == IterResult::unbounded)
    throw std::runtime_error("phase 1 cannot be unbounded");
  if (-tab.t[tab.m][n_total] > opts.feas_tol) return {LpStatus::infeasible, 0.0, {}};

  // Drive leftover basic artificials out; rows that cannot pivot on any
  // structural column are redundant and dropped.
  std::vector<int> keep;
  for (int i = 0; i < tab.m; ++i) {
    if (tab.basis[i] < n_struct) {
      keep.push_back(i);
      continue;
    }
    int piv = -1;
    double best = opts.pivot_tol;
    for (int c = 0; c < n_struct; ++c) {
      if (std::abs(tab.t[i][c]) > best) {
        best = std::abs(tab.t[i][c]);
        piv = c;
      }
    }
    if (piv >= 0) {
      tab.pivot(i, piv);
      keep.push_back(i);
    }
  }
  if (static_cast<int>(keep.size()) < tab.m) {
    std::vector<std::vector<double>> rows;
    std::vector<int> basis;
    for (int i : keep) {
      rows.push_back(std::move(tab.t[i]));
      basis.push_back(tab.basis[i]);
    }
    rows.push_back(std::move(tab.t[tab.m]));
    tab.t = std::move(rows);
    tab.basis = std::move(basis);
    tab.m = static_cast<int>(keep.size());
  }

  // Phase 2: real costs, artificial columns barred.
  for (int c = n_struct; c < n_total; ++c) allowed[c] = false;
  for (int c = 0; c <= n_total; ++c) {
    double s = 0.0;
    for (int i = 0; i < tab.m; ++i) {
      const int b = tab.basis[i];
      if (b < n) s += cost[b] * tab.t[i][c];
    }
    tab.t[tab.m][c] = ((c < n) ? cost[c] : 0.0) - s;
  }

  if (run_simplex(tab, allowed, opts) == IterResult::unbounded)
    return {LpStatus::unbounded, 0.0, {}};

  std::vector<double> x(n, 0.0);
  for (int i = 0; i < tab.m; ++i)
    if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][n_total];

  double value = 0.0;
  for (int j = 0; j < n; ++j) value += lp.objective[j] * x[j];
  return {LpStatus::optimal, value, std::move(x)};
}

}  // namespace unionbounds
