#pragma once

#include <string>
#include <vector>

#include "unionbounds/prob_system.hpp"

namespace unionbounds {

// One circle of the witness construction: the degree-k mass column a_.(k)
// wrapped around a circle of perimeter sum_i a_i(k)/k. Breakpoints are stored
// as cumulative fractions of the perimeter in [0, 1), sorted, ties retained;
// every arc is covered by exactly k distinct events.
struct CircleLayout {
  int degree = 0;
  double perimeter = 0.0;
  std::vector<double> breakpoints;
  std::vector<double> arc_lengths;                // probability mass per arc
  std::vector<std::vector<int>> arc_memberships;  // 0-based event indices
};

// Lays the degree-k masses (mass[i] = a_{i+1}(k)) out on the k-th circle.
// Requires every mass to be at most the perimeter plus 1e-9 slack; a larger
// mass cannot be covered exactly k times and throws InfeasibleError.
// An all-zero column yields an empty layout.
CircleLayout circle_layout(const std::vector<double>& mass, int degree);

// Builds a finite probability system realizing the decomposition, one circle
// per degree. Requires sum_i a_i(k) >= k a_j(k) - 1e-9 for all j, k and
// union mass at most 1 + 1e-9; violations throw InfeasibleError. Zero-length
// arcs become zero-probability outcomes and are retained unless
// prune_zero_outcomes is set.
FiniteProbabilitySystem construct_system(const DegreeDecomposition& a,
                                         bool prune_zero_outcomes = false);

struct RealizationCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct RealizationReport {
  bool all_passed = false;
  std::vector<RealizationCheck> checks;
};

// Checks that sys realizes the decomposition: the degree decomposition, the
// row moments, and the union probability each agree to 1e-9. Failures are
// reported, never thrown.
RealizationReport verify_realization(const DegreeDecomposition& a,
                                     const FiniteProbabilitySystem& sys);

}  // namespace unionbounds
