#include "ladders/theta.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ladders {

namespace {

constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// B_{2k} for the Stirling sums.
constexpr double kB2k[9] = {0,
                            1.0 / 6,
                            -1.0 / 30,
                            1.0 / 42,
                            -1.0 / 30,
                            5.0 / 66,
                            -691.0 / 2730,
                            7.0 / 6,
                            -3617.0 / 510};

}  // namespace

double theta_asymptotic(double t) {
  return t / 2 * std::log(t / (2 * std::numbers::pi)) - t / 2 -
         std::numbers::pi / 8;
}

// theta(t) = -(t/2) ln pi + Im ln Gamma(z), z = 1/4 + i t/2.  The recurrence
// ln Gamma(z) = ln Gamma(z+m) - sum log(z+j) keeps every factor in the right
// half-plane, so the per-factor principal args are branch-safe, and the
// Stirling series at |z+m| >= 12 is then good to a few 1e-17 relative.
ThetaValue theta(double t) {
  if (t < 0) throw std::domain_error("theta: requires t >= 0");
  const std::complex<double> z0(0.25, 0.5 * t);

  std::complex<double> z = z0;
  double arg_sum = 0;
  double re_inv_sum = 0;
  while (std::abs(z) < 12.0) {
    arg_sum += std::arg(z);
    re_inv_sum += (1.0 / z).real();
    z += 1.0;
  }

  const std::complex<double> log_z = std::log(z);
  std::complex<double> lg = (z - 0.5) * log_z - z + kLogSqrt2Pi;
  std::complex<double> psi = log_z - 0.5 / z;
  const std::complex<double> z2 = z * z;
  std::complex<double> zpow_odd = z;   // z^{2k-1}
  std::complex<double> zpow_even = z2; // z^{2k}
  for (int k = 1; k <= 8; ++k) {
    lg += kB2k[k] / (2 * k * (2 * k - 1.0)) / zpow_odd;
    if (k <= 6) psi -= kB2k[k] / (2.0 * k) / zpow_even;
    zpow_odd *= z2;
    zpow_even *= z2;
  }

  ThetaValue out;
  out.t = t;
  out.theta = -0.5 * t * kLogPi + (lg.imag() - arg_sum);
  // d/dt Im ln Gamma(1/4 + it/2) = (1/2) Re psi(1/4 + it/2)
  out.dtheta = 0.5 * (psi.real() - re_inv_sum) - 0.5 * kLogPi;
  return out;
}

}  // namespace ladders
