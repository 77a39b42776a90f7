#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ladders {

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  int panels = 0;
  long evaluations = 0;
};

/// Panel budget exhausted before the tolerance was met; `best` carries the
/// estimate accumulated so far.
struct QuadratureBudgetError : std::runtime_error {
  QuadratureResult best;
  explicit QuadratureBudgetError(const QuadratureResult& r)
      : std::runtime_error("quadrature: evaluation budget exhausted"), best(r) {}
};

/// The integrand returned NaN; distinct from non-convergence.
struct IntegrandNanError : std::runtime_error {
  double at;
  explicit IntegrandNanError(double x)
      : std::runtime_error("quadrature: integrand returned NaN"), at(x) {}
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
inline constexpr double kGk15X[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15WK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGk15WG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
  double abs_integral;  // integral of |f|, used for the roundoff floor
};

template <class F>
PanelEstimate gk15_panel(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  auto eval = [&](double x) {
    double v = f(x);
    if (std::isnan(v)) throw IntegrandNanError(x);
    return v;
  };
  const double fc = eval(c);
  double resk = kGk15WK[7] * fc;
  double resg = kGk15WG[3] * fc;
  double resabs = kGk15WK[7] * std::fabs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kGk15X[i];
    const double f1 = eval(c - dx);
    const double f2 = eval(c + dx);
    resk += kGk15WK[i] * (f1 + f2);
    resabs += kGk15WK[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) resg += kGk15WG[i / 2] * (f1 + f2);
  }
  PanelEstimate pe;
  pe.value = resk * h;
  pe.abs_integral = resabs * std::fabs(h);
  // |K15 - G7| overestimates the K15 truncation error on smooth panels;
  // the eps term keeps the estimate honest once roundoff dominates.
  pe.error = std::fabs((resk - resg) * h) + 1e-16 * pe.abs_integral;
  return pe;
}

struct Panel {
  double a, b, value, error, abs_integral;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
///
/// `min_wavelength_hint`, when present, caps the initial panel width at half
/// that length so an oscillation of the given wavelength cannot alias through
/// the first pass.  The error target is
///   max(abs_tol, rel_tol * max(|I|, int|f|/50), roundoff floor)
/// -- for near-cancelling oscillatory integrals rel_tol is read against the
/// oscillation scale, not the vanishing net value.
/// Throws QuadratureBudgetError / IntegrandNanError.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol,
                           std::optional<double> min_wavelength_hint = {},
                           double abs_tol = 0.0,
                           long max_evaluations = 1000000) {
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (!(rel_tol > 0)) throw std::invalid_argument("integrate: rel_tol must be > 0");
  QuadratureResult res;
  if (a == b) return res;

  long initial = 1;
  if (min_wavelength_hint && *min_wavelength_hint > 0) {
    initial = std::clamp<long>(
        static_cast<long>(std::ceil((b - a) / (*min_wavelength_hint / 2))), 1,
        20000);
  }

  std::priority_queue<detail::Panel> queue;
  double total = 0, total_err = 0, total_abs = 0;
  long evals = 0;
  auto push_panel = [&](double lo, double hi) {
    auto pe = detail::gk15_panel(f, lo, hi);
    evals += 15;
    queue.push({lo, hi, pe.value, pe.error, pe.abs_integral});
    total += pe.value;
    total_err += pe.error;
    total_abs += pe.abs_integral;
  };

  for (long i = 0; i < initial; ++i) {
    double lo = a + (b - a) * static_cast<double>(i) / initial;
    double hi = i + 1 == initial ? b : a + (b - a) * static_cast<double>(i + 1) / initial;
    push_panel(lo, hi);
  }

  auto target = [&] {
    return std::max({abs_tol,
                     rel_tol * std::max(std::fabs(total), total_abs / 50),
                     100 * 1e-16 * total_abs + 1e-300});
  };
  // Roundoff stall: once splitting stops improving the estimate the
  // integrand's own evaluation noise has been reached; return with the
  // achieved estimate rather than churning the budget.
  double best_err = total_err;
  int stalled = 0;
  while (total_err > target()) {
    detail::Panel worst = queue.top();
    // Stop refining panels that have collapsed to roundoff width.
    if (worst.b - worst.a < 64 * 1e-16 * (std::fabs(worst.a) + 1)) break;
    if (evals + 30 > max_evaluations) {
      res.value = total;
      res.error_estimate = total_err;
      res.panels = static_cast<int>(queue.size());
      res.evaluations = evals;
      throw QuadratureBudgetError(res);
    }
    queue.pop();
    total -= worst.value;
    total_err -= worst.error;
    total_abs -= worst.abs_integral;
    const double mid = 0.5 * (worst.a + worst.b);
    push_panel(worst.a, mid);
    push_panel(mid, worst.b);
    if (total_err < (1 - 2e-4) * best_err) {
      best_err = total_err;
      stalled = 0;
    } else if (++stalled >= 200) {
      break;
    }
  }

  res.value = total;
  res.error_estimate = total_err;
  res.panels = static_cast<int>(queue.size());
  res.evaluations = evals;
  return res;
}

}  // namespace ladders
