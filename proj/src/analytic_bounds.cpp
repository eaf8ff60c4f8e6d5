#include "unionbounds/analytic_bounds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unionbounds/errors.hpp"

namespace unionbounds {

namespace {

constexpr double kIntegerSnapTol = 1e-9;
constexpr double kZeroAlphaTol = 1e-12;
constexpr double kExistenceTol = 1e-9;

double snap_integer(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= kIntegerSnapTol ? r : x;
}

bool is_integral(double x) { return x == std::floor(x); }

// Objective of the two-point support {r, r+1} at moments (alpha, ratio*alpha):
// [(2r+1) - ratio] * alpha / (r (r+1)). At an integer ratio n with r in
// {n-1, n} both supports give alpha/n.
double support_value(double alpha, double ratio, int r) {
  return ((2.0 * r + 1.0) - ratio) * alpha / (static_cast<double>(r) * (r + 1.0));
}

// Snapped ratio gamma/alpha clamped into [1, cap]; out-of-range beyond the
// snap tolerance is a domain error.
double checked_ratio(double alpha, double gamma, int cap) {
  double ratio = snap_integer(gamma / alpha);
  if (ratio < 1.0 || ratio > static_cast<double>(cap))
    throw std::domain_error("two-moment ratio gamma/alpha outside [1, cap]");
  return ratio;
}

double chi_kernel(double alpha, double gamma, int cap) {
  if (alpha <= kZeroAlphaTol) return 0.0;
  const double ratio = checked_ratio(alpha, gamma, cap);
  return support_value(alpha, ratio, chi(ratio));
}

// Existence interval for the shared top-degree mass of one event.
struct ShiftInterval {
  double lo = 0.0;
  double hi = 0.0;
};

ShiftInterval shift_interval(double alpha, double gamma, int n) {
  return {std::max(0.0, gamma - (n - 1) * alpha), (gamma - alpha) / (n - 1)};
}

double delta_shift_unchecked(const MomentSummary& s) {
  const int n = s.n_events();
  double delta = 0.0;
  for (int i = 0; i < n; ++i)
    delta = std::max(delta, s.gamma[i] - (n - 1) * s.alpha[i]);
  return delta;
}

// delta may exceed min_i beta_i/(N-1) only within tolerance; beyond that no
// event family matches the summary.
void require_shift_feasible(const MomentSummary& s, double delta) {
  const int n = s.n_events();
  if (n < 2 || delta <= 0.0) return;
  double cap = s.beta[0] / (n - 1);
  for (int i = 1; i < n; ++i) cap = std::min(cap, s.beta[i] / (n - 1));
  if (delta > cap + kExistenceTol)
    throw InfeasibleError("summary not realizable by any event family");
}

}  // namespace

int chi(double x) {
  if (!(x >= 1.0 - kIntegerSnapTol))
    throw std::domain_error("chi: argument must be at least 1");
  double xs = snap_integer(x);
  if (xs < 1.0) xs = 1.0;
  if (is_integral(xs)) {
    const auto n = static_cast<long long>(xs);
    return n >= 2 ? static_cast<int>(n - 1) : 1;
  }
  return static_cast<int>(std::floor(xs));
}

double two_moment_min(const TwoMomentInput& in) {
  if (in.cap < 1) throw std::invalid_argument("two_moment_min: cap must be >= 1");
  if (in.alpha < -kZeroAlphaTol)
    throw std::invalid_argument("two_moment_min: negative alpha");
  if (in.alpha <= kZeroAlphaTol) return 0.0;
  const double ratio = checked_ratio(in.alpha, in.gamma, in.cap);
  const int r = static_cast<int>(std::floor(ratio));
  return support_value(in.alpha, ratio, r);
}

double delta_shift(const MomentSummary& s) {
  require_valid(s);
  return delta_shift_unchecked(s);
}

double shifted_event_min(double alpha, double gamma, int n, double x) {
  if (n < 2) throw std::invalid_argument("shifted_event_min: n must be >= 2");
  const auto iv = shift_interval(alpha, gamma, n);
  if (x < iv.lo - kExistenceTol || x > iv.hi + kExistenceTol)
    throw std::domain_error("shifted_event_min: x outside existence interval");
  x = std::clamp(x, iv.lo, iv.hi);

  const double ap = alpha - x;
  if (ap <= kZeroAlphaTol) return x / n;
  const double gp = std::clamp(gamma - n * x, ap, ap * (n - 1));
  return chi_kernel(ap, gp, n - 1) + x / n;
}

double shifted_event_min_derivative(double alpha, double gamma, int n, double x) {
  if (n < 2)
    throw std::invalid_argument("shifted_event_min_derivative: n must be >= 2");
  const auto iv = shift_interval(alpha, gamma, n);
  if (x < iv.lo - kExistenceTol || x > iv.hi + kExistenceTol)
    throw std::domain_error("shifted_event_min_derivative: x outside interval");
  x = std::clamp(x, iv.lo, iv.hi);

  const double ap = alpha - x;
  if (ap <= kZeroAlphaTol) return 1.0 / n;
  const double ratio = std::clamp(snap_integer((gamma - n * x) / ap), 1.0,
                                  static_cast<double>(n - 1));
  const double c = chi(ratio);
  return (n - c) * (n - c - 1.0) / (n * c * (c + 1.0));
}

double kat_bound(const MomentSummary& s) {
  require_valid(s);
  const int n = s.n_events();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = s.alpha[i];
    if (a <= kZeroAlphaTol) continue;
    const double g = std::clamp(s.gamma[i], a, n * a);
    total += two_moment_min({a, g, n});
  }
  return total;
}

double yat_bound(const MomentSummary& s) {
  require_valid(s);
  const int n = s.n_events();
  const double delta = delta_shift_unchecked(s);
  require_shift_feasible(s, delta);

  double total = delta;
  for (int i = 0; i < n; ++i) {
    const double ap = s.alpha[i] - delta;
    if (ap <= kZeroAlphaTol) continue;
    const double gp = std::clamp(s.gamma[i] - n * delta, ap, ap * (n - 1));
    total += chi_kernel(ap, gp, n - 1);
  }
  return total;
}

double gap_lower_bound(const MomentSummary& s) {
  require_valid(s);
  const int n = s.n_events();
  const double delta = delta_shift_unchecked(s);
  require_shift_feasible(s, delta);
  if (delta <= 0.0) return 0.0;

  double slope = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = s.alpha[i];
    if (a <= kZeroAlphaTol) continue;
    const double ratio = std::clamp(snap_integer(s.gamma[i] / a), 1.0,
                                    static_cast<double>(n));
    const double c = chi(ratio);
    slope += (n - c) * (n - c - 1.0) / (c * (c + 1.0));
  }
  return slope * delta / n;
}

double kat_plus_gap_bound(const MomentSummary& s) {
  return kat_bound(s) + gap_lower_bound(s);
}

double ds_bound(const MomentSummary& s) {
  require_valid(s);
  const int n = s.n_events();
  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    s1 += s.alpha[i];
    s2 += s.gamma[i];
  }
  if (s1 <= kZeroAlphaTol) return 0.0;
  return two_moment_min({s1, std::clamp(s2, s1, n * s1), n});
}

double de_caen_bound(const MomentSummary& s) {
  require_valid(s);
  double total = 0.0;
  for (int i = 0; i < s.n_events(); ++i) {
    const double a = s.alpha[i];
    if (a <= kZeroAlphaTol) continue;
    total += a * a / std::max(s.gamma[i], a);
  }
  return total;
}

double gk_bound(const std::vector<std::vector<double>>& pairwise,
                const std::vector<double>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (static_cast<int>(pairwise.size()) != n)
    throw std::invalid_argument("gk_bound: matrix size does not match alpha");
  double scale = 1.0;
  for (const auto& row : pairwise) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("gk_bound: matrix is not square");
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(pairwise[i][j] - pairwise[j][i]) > 1e-10 * scale)
        throw std::invalid_argument("gk_bound: asymmetric input");

  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b(i, j) = 0.5 * (pairwise[i][j] + pairwise[j][i]);
  Eigen::VectorXd a(n);
  for (int i = 0; i < n; ++i) a(i) = alpha[i];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  const double max_eig = es.eigenvalues().maxCoeff();
  if (max_eig <= 0.0) return 0.0;
  const double cutoff = 1e-10 * max_eig;

  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda < cutoff) continue;
    const double proj = es.eigenvectors().col(i).dot(a);
    total += proj * proj / lambda;
  }
  return total;
}

}  // namespace unionbounds
