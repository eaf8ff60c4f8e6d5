#include "unionbounds/achievability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "unionbounds/errors.hpp"

namespace unionbounds {

namespace {

constexpr double kMergeTol = 1e-12;   // breakpoint coincidence merge
constexpr double kCoupleTol = 1e-9;   // coupling / mass slack

// Wrapped cumulative position as a fraction of the perimeter, in [0, 1).
double wrap_fraction(double pos, double perimeter) {
  const double t = pos / perimeter;
  double f = t - std::floor(t);
  if (f >= 1.0 - kMergeTol || f <= kMergeTol) f = 0.0;
  return f;
}

}  // namespace

CircleLayout circle_layout(const std::vector<double>& mass, int degree) {
  const int n = static_cast<int>(mass.size());
  if (n < 1 || degree < 1 || degree > n)
    throw std::invalid_argument("circle_layout: degree must be in 1..N");

  std::vector<double> m(mass);
  double total = 0.0;
  for (double& v : m) {
    if (v < -kMergeTol) throw InfeasibleError("circle_layout: negative mass");
    // Masses at merge-tolerance scale collapse to 0 so every event boundary
    // either coincides exactly or sits a positive arc apart.
    v = v <= kMergeTol ? 0.0 : v;
    total += v;
  }

  CircleLayout out;
  out.degree = degree;
  if (total <= 0.0) return out;

  const double perimeter = total / degree;
  out.perimeter = perimeter;
  for (double v : m)
    if (v > perimeter + kCoupleTol)
      throw InfeasibleError("circle_layout: event mass exceeds the perimeter");

  // Cumulative event endpoints s_0..s_N and their wrapped fractions. Every
  // event boundary lands on a breakpoint, so membership is constant per arc.
  std::vector<double> cum(n + 1, 0.0);
  for (int e = 0; e < n; ++e) cum[e + 1] = cum[e] + m[e];
  std::vector<double> frac(n + 1, 0.0);
  for (int j = 1; j <= n; ++j) frac[j] = wrap_fraction(cum[j], perimeter);

  // Merge coincident fractions (tolerance 1e-12) to one canonical value so
  // later comparisons are exact.
  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return frac[a] < frac[b]; });
  double canon = frac[order[0]];
  for (int idx : order) {
    if (frac[idx] - canon <= kMergeTol)
      frac[idx] = canon;
    else
      canon = frac[idx];
  }

  std::vector<double> values;  // distinct canonical breakpoints, ascending
  for (int idx : order)
    if (values.empty() || frac[idx] != values.back()) values.push_back(frac[idx]);
  const int n_arcs = static_cast<int>(values.size());
  auto value_index = [&](double v) {
    return static_cast<int>(std::lower_bound(values.begin(), values.end(), v) -
                            values.begin());
  };

  // Coverage per distinct arc [values[d], values[d+1}): event e wraps from
  // frac(s_e) forward over a span of m[e]/perimeter of the circle.
  std::vector<std::vector<int>> cover(n_arcs);
  for (int e = 0; e < n; ++e) {
    const double span = m[e] / perimeter;
    if (span <= kMergeTol) continue;
    if (span >= 1.0 - kMergeTol) {
      for (auto& arc : cover) arc.push_back(e);
      continue;
    }
    const int si = value_index(frac[e]);
    const int ei = value_index(frac[e + 1]);
    if (si < ei) {
      for (int d = si; d < ei; ++d) cover[d].push_back(e);
    } else {
      for (int d = si; d < n_arcs; ++d) cover[d].push_back(e);
      for (int d = 0; d < ei; ++d) cover[d].push_back(e);
    }
  }
  for (const auto& arc : cover)
    if (static_cast<int>(arc.size()) != degree)
      throw InfeasibleError("circle_layout: arc not covered exactly k times");

  // The sorted tuple of the N wrapped endpoints (s_1..s_N) splits the circle
  // into N arcs; coincident breakpoints yield zero-length arcs that take the
  // membership of the half-open arc starting at their position.
  std::vector<double> theta(frac.begin() + 1, frac.end());
  std::sort(theta.begin(), theta.end());
  out.breakpoints = theta;
  for (int r = 0; r < n; ++r) {
    const double next = (r + 1 < n) ? theta[r + 1] : 1.0;
    out.arc_lengths.push_back((next - theta[r]) * perimeter);
    out.arc_memberships.push_back(cover[value_index(theta[r])]);
  }
  return out;
}

FiniteProbabilitySystem construct_system(const DegreeDecomposition& a,
                                         bool prune_zero_outcomes) {
  const int n = a.n_events;
  if (n < 1) throw std::invalid_argument("construct_system: empty decomposition");

  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= n; ++k)
      if (a.raw(i, k) < -1e-12)
        throw InfeasibleError("construct_system: negative mass in decomposition");
  for (int k = 1; k <= n; ++k) {
    double colsum = 0.0;
    for (int i = 0; i < n; ++i) colsum += a.value(i, k);
    for (int j = 0; j < n; ++j)
      if (k * a.value(j, k) > colsum + kCoupleTol)
        throw InfeasibleError("construct_system: coupling violated at degree " +
                              std::to_string(k));
  }
  if (a.union_mass() > 1.0 + kCoupleTol)
    throw InfeasibleError("construct_system: union mass exceeds 1");

  FiniteProbabilitySystem sys;
  sys.n_events = n;
  for (int k = 1; k <= n; ++k) {
    std::vector<double> column(n);
    double colsum = 0.0;
    for (int i = 0; i < n; ++i) {
      column[i] = a.value(i, k);
      colsum += column[i];
    }
    if (colsum <= 0.0) continue;  // circle carries no mass

    const CircleLayout layout = circle_layout(column, k);
    for (std::size_t r = 0; r < layout.arc_lengths.size(); ++r) {
      const double p = layout.arc_lengths[r];
      if (prune_zero_outcomes && p == 0.0) continue;
      std::vector<bool> row(n, false);
      for (int e : layout.arc_memberships[r]) row[e] = true;
      sys.outcome_probs.push_back(p);
      sys.membership.push_back(std::move(row));
    }
  }
  return sys;
}

RealizationReport verify_realization(const DegreeDecomposition& a,
                                     const FiniteProbabilitySystem& sys) {
  constexpr double kTol = 1e-9;
  RealizationReport report;

  const auto violations = validate(sys);
  const bool shape_ok =
      violations.empty() && sys.n_events == a.n_events && a.n_events >= 1;
  report.checks.push_back(
      {"system-valid", shape_ok, static_cast<double>(violations.size())});
  if (!shape_ok) {
    report.all_passed = false;
    return report;
  }

  const int n = a.n_events;
  const auto dd = degree_decomposition(sys);
  double dd_residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= n; ++k)
      dd_residual = std::max(dd_residual, std::abs(dd.value(i, k) - a.value(i, k)));
  report.checks.push_back(
      {"degree-decomposition", dd_residual <= kTol, dd_residual});

  const auto s = moment_summary(sys);
  double moment_residual = 0.0;
  for (int i = 0; i < n; ++i) {
    moment_residual = std::max(moment_residual, std::abs(s.alpha[i] - a.row_mass(i)));
    moment_residual =
        std::max(moment_residual, std::abs(s.gamma[i] - a.row_weighted_mass(i)));
  }
  report.checks.push_back({"row-moments", moment_residual <= kTol, moment_residual});

  const double union_residual =
      std::abs(exact_union_probability(sys) - a.union_mass());
  report.checks.push_back({"union-probability", union_residual <= kTol, union_residual});

  report.all_passed = true;
  for (const auto& c : report.checks) report.all_passed = report.all_passed && c.passed;
  return report;
}

}  // namespace unionbounds
