#pragma once

#include <vector>

namespace ladders {

/// Bessel functions of the first kind, orders 0 and 1, for x >= 0.
/// Power series below the seam at x = 16 (evaluated in compensated
/// double-double arithmetic), Hankel asymptotic expansion above it;
/// both branches agree to better than 1e-12 at the seam.
double j0(double x);
double j1(double x);

/// Ordered positive zeros mu_n of J1 (n = 1, 2, ...), each bracketed by a
/// sign change and refined to 1e-12.
struct BesselZeroTable {
  std::vector<double> zeros;

  int count() const { return static_cast<int>(zeros.size()); }
  /// 1-based accessor matching the customary index of mu_n.
  double mu(int n) const { return zeros.at(n - 1); }
  double max_zero() const { return zeros.back(); }

  /// Largest n with mu_n <= x, or 0 if x < mu_1.
  int cell_index(double x) const;
};

BesselZeroTable j1_zeros(int count);

/// int_a^b J1(x) dx = J0(a) - J0(b), closed form (no quadrature).
/// Requires 0 <= a <= b.
double j1_definite_integral(double a, double b);

/// Leading large-argument approximation of J0(t_lo) - J0(t_hi):
/// sqrt(2/(pi t_lo)) [cos(t_lo - pi/4) - cos(t_hi - pi/4)].
double j0_asymptotic_difference(double t_lo, double t_hi);

namespace detail {
// Both evaluation branches, exposed for seam tests.
double j0_series(double x);
double j1_series(double x);
double j0_asymptotic(double x);
double j1_asymptotic(double x);
}  // namespace detail

}  // namespace ladders
