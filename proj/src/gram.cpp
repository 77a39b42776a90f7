#include "ladders/gram.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ladders/theta.hpp"

namespace ladders {

namespace {

constexpr double kPi = std::numbers::pi;

// Seed for theta(t) = target by inverting the three-term asymptotic with a
// few Newton steps on the closed form.
double gram_seed(double target) {
  double t = std::max(18.0, 2 * kPi * std::exp(1.0));
  for (int it = 0; it < 40; ++it) {
    const double f = theta_asymptotic(t) - target;
    const double df = 0.5 * std::log(t / (2 * kPi));
    const double step = f / std::max(df, 0.05);
    t -= step;
    if (t < 8) t = 8;
    if (std::fabs(step) < 1e-9 * t) break;
  }
  return t;
}

}  // namespace

GramPoint gram_point(long nu) {
  if (nu < 1) throw std::domain_error("gram_point: requires nu >= 1");
  const double target = kPi * static_cast<double>(nu);
  double t = gram_seed(target);

  // theta is smooth and increasing here; Newton lands in a few steps.
  // Acceptance is absolute: the defining equation is solved to ~theta's own
  // evaluation noise, well under the 1e-9 contract.
  const double accept = std::max(5e-10, 8 * 1.1e-16 * std::fabs(target));
  bool converged = false;
  for (int it = 0; it < 30; ++it) {
    const ThetaValue tv = theta(t);
    const double f = tv.theta - target;
    if (std::fabs(f) <= accept) {
      converged = true;
      break;
    }
    const double next = t - f / tv.dtheta;
    if (!(next > 2 * kPi)) {
      converged = false;
      break;
    }
    t = next;
  }

  if (!converged) {
    // Bisection fallback on a guaranteed bracket around the seed.
    double lo = std::max(7.0, t - 50), hi = t + 50;
    while (theta(lo).theta > target && lo > 7) lo = std::max(7.0, lo - 100);
    while (theta(hi).theta < target) hi += 100;
    if (theta(lo).theta > target)
      throw std::runtime_error("gram_point: failed to bracket nu=" +
                               std::to_string(nu) + " (lo=" +
                               std::to_string(lo) + ", hi=" + std::to_string(hi) + ")");
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (theta(mid).theta < target ? lo : hi) = mid;
    }
    t = 0.5 * (lo + hi);
  }

  GramPoint out;
  out.nu = nu;
  out.t = t;
  out.theta_residual = theta(t).theta - target;
  return out;
}

double spacing_residual(long nu) {
  const double t0 = gram_point(nu).t;
  const double t1 = gram_point(nu + 1).t;
  const double log_t = std::log(t0);
  const double two_term =
      2 * kPi / log_t + 2 * kPi * std::log(2 * kPi) / (log_t * log_t);
  return (t1 - t0) - two_term;
}

namespace {

// Does [a, b] intersect any [center_k - eps, center_k + eps] with
// center_k = k * pi + offset, k integer?
bool hits_lattice(double a, double b, double offset, double eps) {
  const long k_lo = static_cast<long>(std::floor((a - offset - eps) / kPi));
  const long k_hi = static_cast<long>(std::ceil((b - offset + eps) / kPi));
  for (long k = k_lo; k <= k_hi; ++k) {
    const double center = k * kPi + offset;
    if (center + eps >= a && center - eps <= b) return true;
  }
  return false;
}

}  // namespace

IntervalClassification classify_interval(long nu, double epsilon,
                                         const BesselZeroTable& zeros,
                                         ExclusionMode mode) {
  if (!(epsilon > 0))
    throw std::invalid_argument("classify_interval: epsilon must be > 0");
  const double t0 = gram_point(nu).t;
  const double t1 = gram_point(nu + 1).t;
  if (zeros.max_zero() < t1)
    throw std::out_of_range(
        "classify_interval: zero table covers only up to " +
        std::to_string(zeros.max_zero()) + ", needed " + std::to_string(t1));

  IntervalClassification out;
  out.nu = nu;
  const int n = zeros.cell_index(t0);
  out.containing_bessel_index = n >= 1 ? std::optional<int>(n) : std::nullopt;
  out.inside_bessel_cell =
      n >= 1 && n < zeros.count() && zeros.mu(n) <= t0 && t1 <= zeros.mu(n + 1);
  const double offset = mode == ExclusionMode::paper_literal ? 0.0 : kPi / 4;
  out.clears_exclusion_zone = !hits_lattice(t0, t1, offset, epsilon);
  out.sin_magnitude = std::fabs(std::sin(t0 - kPi / 4));
  out.admissible = out.inside_bessel_cell && out.clears_exclusion_zone;
  return out;
}

int count_admissible_in_cell(int n, double epsilon) {
  if (n < 1) throw std::domain_error("count_admissible_in_cell: requires n >= 1");
  (void)epsilon;  // cell containment only
  const BesselZeroTable zeros = j1_zeros(n + 1);
  const double mu_lo = zeros.mu(n);
  const double mu_hi = zeros.mu(n + 1);

  // First Gram index whose point can lie in the cell.
  long nu = std::max(1L, static_cast<long>(
                             std::floor(theta(mu_lo).theta / kPi)) - 1);
  while (gram_point(nu).t < mu_lo) ++nu;
  // nu now indexes the first Gram point >= mu_lo.
  int count = 0;
  double t_prev = gram_point(nu).t;
  for (;; ++nu) {
    const double t_next = gram_point(nu + 1).t;
    if (t_next > mu_hi) break;
    // interval [t_nu, t_{nu+1}] wholly inside the cell
    if (t_prev >= mu_lo) ++count;
    t_prev = t_next;
  }
  return count;
}

}  // namespace ladders
