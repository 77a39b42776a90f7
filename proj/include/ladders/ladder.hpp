#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ladders/quadrature.hpp"

namespace ladders {

enum class LadderOrder { first, second };

/// Monotone sampled representation of the ladder phi, built by cumulative
/// integration of its defining derivative:
///
///   order first    phi'(t) = Z(t)^2 / ln t
///   order second   phi'(t) = 2 pi^2 Z(t)^4 / ln^4 t
///
/// Nodes are at most min(0.25, pi/ln t) apart (half the local Gram spacing),
/// interpolated by a cubic Hermite through the exact derivative samples.
/// `derivative()` returns the derivative of the interpolant itself, so the
/// change-of-variables identity holds at quadrature accuracy no matter how
/// well the table approximates the ideal ladder.
class LadderTable {
 public:
  LadderOrder order() const { return order_; }
  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }
  double phi_min() const { return phi_.front(); }
  double phi_max() const { return phi_.back(); }
  double anchor_t() const { return t_.front(); }
  double anchor_phi() const { return phi_.front(); }
  double tolerance() const { return tol_; }
  const std::string& derivative_def() const { return derivative_def_; }
  std::size_t size() const { return t_.size(); }

  /// phi(t); throws std::out_of_range (with the covered range) outside the grid.
  double value(double t) const;
  /// d phi / dt of the interpolant.
  double derivative(double t) const;
  /// phi^{-1}(x), solved to a few ulp on the interpolant.
  double inverse(double x) const;

  const std::vector<double>& grid_t() const { return t_; }
  const std::vector<double>& grid_phi() const { return phi_; }
  const std::vector<double>& grid_dphi() const { return dphi_; }

  friend LadderTable build_ladder(LadderOrder, double, double, double);
  friend LadderTable load_ladder(std::istream&);

 private:
  int segment_of_t(double t) const;
  void validate() const;

  LadderOrder order_ = LadderOrder::first;
  double tol_ = 0;
  std::string derivative_def_;
  std::vector<double> t_, phi_, dphi_;
};

/// Build a ladder over [t_min, t_max] (10 <= t_min < t_max <= 1e6) with
/// per-step integration error <= tol, anchored so that
/// t_min - phi(t_min) = (1 - c) pi(t_min), c Euler's constant.
LadderTable build_ladder(LadderOrder order, double t_min, double t_max,
                         double tol);

double ladder_value(const LadderTable& table, double t);
double ladder_inverse(const LadderTable& table, double x);

/// Diagnostic (t - phi(t)) / ((1 - c) pi(t)).
double ladder_lag_ratio(const LadderTable& table, double t);

/// Both sides of the substitution identity
///   lhs = int_{phi^{-1}(T)}^{phi^{-1}(T+U)} f(phi(t)) phi'(t) dt
///   rhs = int_T^{T+U} f(x) dx
/// for any integrable f.  Requires 0 < U <= T / ln T.
struct SubstitutionCheck {
  double lhs;
  double rhs;
  double lhs_error_estimate;
  double rhs_error_estimate;
};

SubstitutionCheck substitution_check(const LadderTable& table,
                                     const std::function<double(double)>& f,
                                     double T, double U, double rel_tol = 1e-9);

/// Integrate f(t) over [a, b] with panel boundaries aligned to the table's
/// grid knots.  The interpolant is only C^1 there; alignment keeps the
/// embedded error estimates honest for integrands built on the table.
QuadratureResult integrate_on_table(const LadderTable& table,
                                    const std::function<double(double)>& f,
                                    double a, double b, double rel_tol);

/// Serialization: one '#'-prefixed JSON header line (order, anchor,
/// tolerance, derivative_def) followed by CSV rows t,phi,phi_prime.
void save_ladder(const LadderTable& table, std::ostream& out);
void save_ladder(const LadderTable& table, const std::string& path);
LadderTable load_ladder(std::istream& in);
LadderTable load_ladder(const std::string& path);

}  // namespace ladders
