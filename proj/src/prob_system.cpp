#include "unionbounds/prob_system.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unionbounds {

namespace {

constexpr double kMassSlack = 1e-12;      // total mass may exceed 1 by this
constexpr double kIdentityTol = 1e-12;    // gamma = alpha + beta redundancy
constexpr double kRangeTol = 1e-9;        // alpha <= gamma <= N*alpha

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << "; ";
    out << parts[i];
  }
  return out.str();
}

}  // namespace

int FiniteProbabilitySystem::degree(int m) const {
  int d = 0;
  for (bool in : membership[m]) d += in ? 1 : 0;
  return d;
}

MomentSummary make_summary(std::vector<double> alpha, std::vector<double> gamma) {
  MomentSummary s;
  s.beta.resize(alpha.size());
  for (std::size_t i = 0; i < alpha.size() && i < gamma.size(); ++i)
    s.beta[i] = gamma[i] - alpha[i];
  s.alpha = std::move(alpha);
  s.gamma = std::move(gamma);
  return s;
}

DegreeDecomposition DegreeDecomposition::zeros(int n_events) {
  DegreeDecomposition d;
  d.n_events = n_events;
  d.a.assign(static_cast<std::size_t>(n_events) * n_events, 0.0);
  return d;
}

double DegreeDecomposition::value(int i, int k) const {
  double v = raw(i, k);
  return (v < 0.0 && v >= -1e-12) ? 0.0 : v;
}

double DegreeDecomposition::union_mass() const {
  double total = 0.0;
  for (int i = 0; i < n_events; ++i)
    for (int k = 1; k <= n_events; ++k) total += value(i, k) / k;
  return total;
}

double DegreeDecomposition::row_mass(int i) const {
  double total = 0.0;
  for (int k = 1; k <= n_events; ++k) total += value(i, k);
  return total;
}

double DegreeDecomposition::row_weighted_mass(int i) const {
  double total = 0.0;
  for (int k = 1; k <= n_events; ++k) total += k * value(i, k);
  return total;
}

std::vector<std::string> validate(const FiniteProbabilitySystem& sys) {
  std::vector<std::string> errors;
  if (sys.n_events < 1) errors.push_back("n_events must be positive");
  if (sys.membership.size() != sys.outcome_probs.size())
    errors.push_back("membership row count does not match outcome count");

  double total = 0.0;
  for (int m = 0; m < sys.n_outcomes(); ++m) {
    double p = sys.outcome_probs[m];
    if (!std::isfinite(p)) {
      errors.push_back("outcome " + std::to_string(m) + ": non-finite probability");
      continue;
    }
    if (p < 0.0)
      errors.push_back("outcome " + std::to_string(m) + ": negative probability");
    total += p;
  }
  if (total > 1.0 + kMassSlack) errors.push_back("total mass exceeds 1");

  for (std::size_t m = 0; m < sys.membership.size(); ++m)
    if (static_cast<int>(sys.membership[m].size()) != sys.n_events)
      errors.push_back("outcome " + std::to_string(m) +
                       ": membership row has wrong length");
  return errors;
}

std::vector<std::string> validate(const MomentSummary& s) {
  std::vector<std::string> errors;
  const int n = s.n_events();
  if (n < 1) errors.push_back("summary must cover at least one event");
  if (s.gamma.size() != s.alpha.size() || s.beta.size() != s.alpha.size())
    errors.push_back("alpha, beta, gamma must have equal length");
  if (!errors.empty()) return errors;

  for (int i = 0; i < n; ++i) {
    double a = s.alpha[i], b = s.beta[i], g = s.gamma[i];
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(g)) {
      errors.push_back("event " + std::to_string(i + 1) + ": non-finite moment");
      continue;
    }
    if (a < 0.0 || a > 1.0)
      errors.push_back("event " + std::to_string(i + 1) + ": alpha outside [0, 1]");
    if (std::abs(g - (a + b)) > kIdentityTol)
      errors.push_back("event " + std::to_string(i + 1) + ": gamma != alpha + beta");
    if (g < a - kRangeTol)
      errors.push_back("event " + std::to_string(i + 1) + ": gamma below alpha");
    if (g > n * a + kRangeTol)
      errors.push_back("event " + std::to_string(i + 1) + ": gamma above N*alpha");
  }
  return errors;
}

void require_valid(const FiniteProbabilitySystem& sys) {
  auto errors = validate(sys);
  if (!errors.empty()) throw std::invalid_argument("invalid system: " + join(errors));
}

void require_valid(const MomentSummary& s) {
  auto errors = validate(s);
  if (!errors.empty()) throw std::invalid_argument("invalid summary: " + join(errors));
}

double exact_union_probability(const FiniteProbabilitySystem& sys) {
  require_valid(sys);
  double total = 0.0;
  for (int m = 0; m < sys.n_outcomes(); ++m)
    if (sys.degree(m) > 0) total += sys.outcome_probs[m];
  return total;
}

MomentSummary moment_summary(const FiniteProbabilitySystem& sys) {
  require_valid(sys);
  const int n = sys.n_events;
  MomentSummary s;
  s.alpha.assign(n, 0.0);
  s.beta.assign(n, 0.0);
  s.gamma.assign(n, 0.0);
  for (int m = 0; m < sys.n_outcomes(); ++m) {
    const double p = sys.outcome_probs[m];
    const int deg = sys.degree(m);
    for (int i = 0; i < n; ++i) {
      if (!sys.membership[m][i]) continue;
      // sum_j P(A_i n A_j) counts the outcome once per event containing it.
      s.alpha[i] += p;
      s.gamma[i] += p * deg;
    }
  }
  for (int i = 0; i < n; ++i) s.beta[i] = s.gamma[i] - s.alpha[i];
  return s;
}

DegreeDecomposition degree_decomposition(const FiniteProbabilitySystem& sys) {
  require_valid(sys);
  auto d = DegreeDecomposition::zeros(sys.n_events);
  for (int m = 0; m < sys.n_outcomes(); ++m) {
    const int deg = sys.degree(m);
    if (deg == 0) continue;
    for (int i = 0; i < sys.n_events; ++i)
      if (sys.membership[m][i]) d.at(i, deg) += sys.outcome_probs[m];
  }
  return d;
}

std::vector<std::vector<double>> pairwise_matrix(const FiniteProbabilitySystem& sys) {
  require_valid(sys);
  const int n = sys.n_events;
  std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
  for (int m = 0; m < sys.n_outcomes(); ++m) {
    const double p = sys.outcome_probs[m];
    for (int i = 0; i < n; ++i) {
      if (!sys.membership[m][i]) continue;
      for (int j = 0; j < n; ++j)
        if (sys.membership[m][j]) b[i][j] += p;
    }
  }
  return b;
}

}  // namespace unionbounds
