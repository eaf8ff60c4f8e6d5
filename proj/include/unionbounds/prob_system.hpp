#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace unionbounds {

// A finite probability system over events A_1..A_N: a list of elementary
// outcomes with probabilities and per-outcome event memberships. Probability
// mass not assigned to any listed outcome is implicit degree-0 (complement)
// mass, so the listed probabilities may sum to less than 1.
struct FiniteProbabilitySystem {
  int n_events = 0;
  std::vector<double> outcome_probs;
  std::vector<std::vector<bool>> membership;  // membership[m][i]: outcome m in A_{i+1}

  int n_outcomes() const { return static_cast<int>(outcome_probs.size()); }

  // Number of events containing outcome m.
  int degree(int m) const;
};

// Per-event partial information:
//   alpha_i = P(A_i)
//   beta_i  = sum over j != i of P(A_i n A_j)
//   gamma_i = alpha_i + beta_i = sum over all j of P(A_i n A_j)
struct MomentSummary {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> gamma;

  int n_events() const { return static_cast<int>(alpha.size()); }
};

// Builds a summary from (alpha, gamma); beta is derived.
MomentSummary make_summary(std::vector<double> alpha, std::vector<double> gamma);

// N x N matrix a_i(k): probability mass of A_i carried by outcomes of degree
// exactly k, for k = 1..N. Stored row-major.
struct DegreeDecomposition {
  int n_events = 0;
  std::vector<double> a;

  static DegreeDecomposition zeros(int n_events);

  // i is 0-based, k is 1-based.
  double& at(int i, int k) {
    return a[static_cast<std::size_t>(i) * n_events + static_cast<std::size_t>(k - 1)];
  }
  double raw(int i, int k) const {
    return a[static_cast<std::size_t>(i) * n_events + static_cast<std::size_t>(k - 1)];
  }
  // Read accessor; round-off negatives within -1e-12 clamp to 0.
  double value(int i, int k) const;

  // sum_i sum_k a_i(k)/k: the union mass the decomposition accounts for.
  double union_mass() const;
  // Row moments sum_k a_i(k) and sum_k k*a_i(k).
  double row_mass(int i) const;
  double row_weighted_mass(int i) const;
};

// Return all invariant violations; an empty list means the input is valid.
std::vector<std::string> validate(const FiniteProbabilitySystem& sys);
std::vector<std::string> validate(const MomentSummary& summary);

// Throwing forms of the checks above (std::invalid_argument on violation).
void require_valid(const FiniteProbabilitySystem& sys);
void require_valid(const MomentSummary& summary);

// P(union of all events): total mass of outcomes with degree >= 1.
double exact_union_probability(const FiniteProbabilitySystem& sys);

MomentSummary moment_summary(const FiniteProbabilitySystem& sys);

DegreeDecomposition degree_decomposition(const FiniteProbabilitySystem& sys);

// Entry (i, j) = P(A_i n A_j); the diagonal is alpha and row i sums to gamma_i.
std::vector<std::vector<double>> pairwise_matrix(const FiniteProbabilitySystem& sys);

}  // namespace unionbounds
