#pragma once

#include <optional>

#include "ladders/bessel.hpp"

namespace ladders {

/// Solution of theta(t_nu) = pi * nu, nu = 1, 2, ...
struct GramPoint {
  long nu;
  double t;
  double theta_residual;  // theta(t) - pi*nu, kept below 1e-9
};

/// Compute the nu-th Gram point (Newton on theta, bisection fallback).
GramPoint gram_point(long nu);

/// (t_{nu+1} - t_nu) - [2 pi / ln t_nu + 2 pi ln(2 pi) / ln^2 t_nu].
/// The remainder of the spacing law; scales like 1/ln^3 t_nu.
double spacing_residual(long nu);

/// Which lattice the exclusion zones are centred on.  `paper_literal`
/// excludes neighbourhoods of k*pi; `sin_zeros` excludes neighbourhoods of
/// k*pi + pi/4, the zeros of sin(t - pi/4).
enum class ExclusionMode { paper_literal, sin_zeros };

/// Admissibility verdict for the Gram interval [t_nu, t_{nu+1}].
struct IntervalClassification {
  long nu;
  std::optional<int> containing_bessel_index;  // n with mu_n <= t_nu, if any
  bool inside_bessel_cell;   // [t_nu, t_{nu+1}] inside [mu_n, mu_{n+1}]
  bool clears_exclusion_zone;
  double sin_magnitude;      // |sin(t_nu - pi/4)|
  bool admissible;           // both conditions above
};

/// Classify one Gram interval.  The zero table must cover t_{nu+1};
/// otherwise throws std::out_of_range.
IntervalClassification classify_interval(long nu, double epsilon,
                                         const BesselZeroTable& zeros,
                                         ExclusionMode mode);

/// Number of Gram intervals wholly inside [mu_n, mu_{n+1}] (cell containment
/// only; epsilon is accepted for interface symmetry but plays no role in the
/// count).  Asymptotically ~ (1/2) ln t.
int count_admissible_in_cell(int n, double epsilon);

}  // namespace ladders
