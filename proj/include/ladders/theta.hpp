#pragma once

namespace ladders {

/// Riemann-Siegel theta at one abscissa, with its first derivative.
/// theta(t) = -(t/2) ln pi + Im ln Gamma(1/4 + i t/2).
struct ThetaValue {
  double t;
  double theta;
  double dtheta;
};

/// Evaluate theta and theta' at t >= 0.  Throws std::domain_error for t < 0.
///
/// Accuracy: a few ulp of the result everywhere; in absolute terms 1e-10 is
/// met up to t ~ 3e4, beyond which one ulp of theta itself exceeds that.
ThetaValue theta(double t);

/// Three-term asymptotic (t/2) ln(t/(2 pi)) - t/2 - pi/8.
double theta_asymptotic(double t);

}  // namespace ladders
