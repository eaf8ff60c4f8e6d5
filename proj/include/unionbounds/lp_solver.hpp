#pragma once

#include <vector>

namespace unionbounds {

enum class LpSense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpConstraint {
  std::vector<double> row;
  double rhs = 0.0;
};

// Dense linear program over nonnegative variables:
//   optimize objective . x
//   subject to  eq.row . x == eq.rhs  and  ge.row . x >= ge.rhs,  x >= 0.
struct LinearProgram {
  LpSense sense = LpSense::minimize;
  std::vector<double> objective;
  std::vector<LpConstraint> eq_constraints;
  std::vector<LpConstraint> ge_constraints;

  int n_vars() const { return static_cast<int>(objective.size()); }
};

struct LpOptions {
  double pivot_tol = 1e-10;
  double feas_tol = 1e-9;
  int max_iters = 100000;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::vector<double> point;
};

// Two-phase dense tableau simplex with Bland's anti-cycling rule.
// Infeasible and unbounded problems are reported via the status, never by
// exception. The result is deterministic for identical input.
LpSolution solve(const LinearProgram& lp, const LpOptions& opts = {});

}  // namespace unionbounds
