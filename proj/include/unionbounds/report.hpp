#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unionbounds/lp_solver.hpp"
#include "unionbounds/prob_system.hpp"

namespace unionbounds {

// All bound values for one system or summary. The bounds list keeps insertion
// order: ds, de_caen, kat, gk, yat, kat_plus_gap, opt_lower, opt_upper,
// alpha_lower, alpha_upper. gk and exact_union are present only when a full
// system (not just a summary) was provided.
struct BoundReport {
  std::string system_id;
  std::optional<double> exact_union;
  std::vector<std::pair<std::string, double>> bounds;
  double gap = 0.0;        // yat - kat
  double gap_bound = 0.0;  // analytical lower bound on the gap

  const double* find(const std::string& name) const;
};

BoundReport compute_report(const FiniteProbabilitySystem& sys,
                           const std::string& id, const LpOptions& opts = {});
BoundReport compute_report(const MomentSummary& s, const std::string& id,
                           const LpOptions& opts = {});

// Display rounding: half-up at 4 decimals.
std::string format_fixed4(double x);

std::string render_table(const BoundReport& r);
// Machine formats carry full precision.
std::string render_json(const BoundReport& r);
std::string csv_header();
std::string csv_row(const BoundReport& r);
std::string render_csv(const BoundReport& r);

}  // namespace unionbounds
