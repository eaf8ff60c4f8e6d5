#pragma once

#include <vector>

#include "unionbounds/prob_system.hpp"

namespace unionbounds {

// floor(x), except integer arguments n >= 2 map to n - 1. Integrality is
// decided with a 1e-9 snap so 4-decimal inputs cannot land on the wrong side
// of a breakpoint. Requires x >= 1.
int chi(double x);

// Input of the two-moment minimization: minimize sum_k a(k)/k over a(k) >= 0
// with sum_k a(k) = alpha and sum_k k*a(k) = gamma, for k = 1..cap.
struct TwoMomentInput {
  double alpha = 0.0;
  double gamma = 0.0;
  int cap = 1;
};

// Closed form of the minimum above: with r = floor(gamma/alpha),
// [1/r - (gamma/alpha - r) / ((1+r) r)] * alpha. Returns 0 when alpha is 0.
double two_moment_min(const TwoMomentInput& in);

// The forced common top-degree mass, max_i [gamma_i - (N-1) alpha_i]^+.
double delta_shift(const MomentSummary& s);

// Per-event objective when the shared degree-n mass is pinned at x: the
// two-moment minimum at the shifted moments (alpha - x, gamma - n x) with chi
// in place of floor, plus x/n. Defined on
//   [gamma - (n-1) alpha]^+ <= x <= (gamma - alpha)/(n-1).
double shifted_event_min(double alpha, double gamma, int n, double x);

// Piecewise derivative of shifted_event_min in x:
//   (n - c)(n - c - 1) / (n c (c + 1))  with c = chi((gamma - n x)/(alpha - x)).
double shifted_event_min_derivative(double alpha, double gamma, int n, double x);

// Sum of per-event two-moment minima.
double kat_bound(const MomentSummary& s);

// Sharper analytical bound: delta plus the chi-kernel evaluated at the
// delta-shifted moments. Equals kat_bound whenever delta is 0. Throws
// InfeasibleError when delta exceeds min_i beta_i/(N-1), i.e. when no event
// family matches the summary.
double yat_bound(const MomentSummary& s);

// Analytical lower bound on yat_bound - kat_bound.
double gap_lower_bound(const MomentSummary& s);

// kat_bound + gap_lower_bound: between the KAT and YAT bounds.
double kat_plus_gap_bound(const MomentSummary& s);

// Aggregate two-moment minimum with S1 = sum alpha_i, S2 = sum gamma_i.
double ds_bound(const MomentSummary& s);

// sum_i alpha_i^2 / gamma_i over events with positive alpha.
double de_caen_bound(const MomentSummary& s);

// Quadratic-form bound alpha^T B^+ alpha from the full pairwise intersection
// matrix B. The pseudo-inverse is taken via symmetric eigendecomposition,
// discarding eigenvalues below 1e-10 times the largest one.
double gk_bound(const std::vector<std::vector<double>>& pairwise,
                const std::vector<double>& alpha);

}  // namespace unionbounds
