#pragma once

#include <stdexcept>
#include <string>

namespace ladders {

enum class ZetaMethod { riemann_siegel, euler_maclaurin, auto_select };

/// Absolute-accuracy request for Z(t) evaluation.  auto_select uses
/// Euler-Maclaurin below `auto_crossover` and Riemann-Siegel above it.
struct EvalAccuracy {
  double abs_tol = 1e-4;
  ZetaMethod method = ZetaMethod::auto_select;
  double auto_crossover = 30.0;
};

/// Requested abs_tol is below what the method can deliver at that abscissa.
struct AccuracyUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Smallest absolute error the given method can guarantee at abscissa t.
double method_floor(ZetaMethod method, double t);

/// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it); real-valued, |Z| = |zeta(1/2+it)|.
///
/// Riemann-Siegel: main sum plus four correction terms, requires t >= 2.
/// Euler-Maclaurin: any t >= 0, cost grows linearly with t.
double hardy_z(double t, const EvalAccuracy& acc = {});

/// |zeta(1/2+it)|^2, computed as hardy_z(t)^2.  Requires t >= 2.
double zeta_abs_sq(double t, const EvalAccuracy& acc = {});

}  // namespace ladders
