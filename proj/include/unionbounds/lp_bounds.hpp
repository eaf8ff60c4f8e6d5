#pragma once

#include <utility>
#include <vector>

#include "unionbounds/lp_solver.hpp"
#include "unionbounds/prob_system.hpp"

namespace unionbounds {

struct LpBoundResult {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  DegreeDecomposition decomposition;
};

// Per-event two-moment LP: minimize sum_i sum_k a_i(k)/k subject to the row
// moment constraints sum_k a_i(k) = alpha_i and sum_k k a_i(k) = gamma_i.
// The optimal point is unique; the value matches kat_bound.
LpBoundResult kat_lp(const MomentSummary& s, const LpOptions& opts = {});

// Optimal lower bound: the two-moment rows plus the coverage coupling
// sum_i a_i(k) >= k a_j(k) for every j and k. The degree-N block is collapsed
// to a single shared variable (the coupling there forces a_1(N) = ... =
// a_N(N)), leaving N^2 - N + 1 variables. Variable layout: a_i(k) row-major
// for k < N, shared degree-N variable last.
LpBoundResult optimal_lower_lp(const MomentSummary& s, const LpOptions& opts = {});

// Unreduced N^2-variable form of the same program; reference implementation
// kept as a test oracle for the reduction.
LpBoundResult optimal_lower_lp_unreduced(const MomentSummary& s,
                                         const LpOptions& opts = {});

// Maximizes the same objective over the same constraints plus
// sum_i sum_k a_i(k)/k <= 1.
LpBoundResult optimal_upper_lp(const MomentSummary& s, const LpOptions& opts = {});

// Optimal (lower, upper) bounds from the alpha vector alone:
// (max_i alpha_i, min(sum_i alpha_i, 1)). Both values are cross-checked
// against the generating LP solved directly; a disagreement beyond 1e-9
// throws std::logic_error.
std::pair<double, double> alpha_only_bounds(const std::vector<double>& alpha,
                                            const LpOptions& opts = {});

// Aggregated two-moment LP over a(k) with S1 = sum alpha_i, S2 = sum gamma_i.
// The returned decomposition spreads a(k) uniformly across events
// (a_j(k) = a(k)/N), which satisfies the coupled form of the program.
LpBoundResult ds_lp(const MomentSummary& s, const LpOptions& opts = {});

}  // namespace unionbounds
