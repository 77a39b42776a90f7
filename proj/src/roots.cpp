#include "ladders/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ladders {

double invert_monotone(const std::function<double(double)>& g, double target,
                       double bracket_lo, double bracket_hi, double tol) {
  if (!(bracket_lo < bracket_hi))
    throw BracketError("invert_monotone: empty bracket");
  if (!(tol > 0)) throw std::invalid_argument("invert_monotone: tol must be > 0");

  // Spot-check monotone direction on an interior sample.
  {
    double prev = g(bracket_lo);
    int direction = 0;
    for (int i = 1; i <= 8; ++i) {
      const double x = bracket_lo + (bracket_hi - bracket_lo) * i / 8.0;
      const double cur = g(x);
      if (cur > prev) {
        if (direction < 0) throw NotMonotoneError("invert_monotone: g not monotone on bracket");
        direction = 1;
      } else if (cur < prev) {
        if (direction > 0) throw NotMonotoneError("invert_monotone: g not monotone on bracket");
        direction = -1;
      }
      prev = cur;
    }
  }

  double lo = bracket_lo, hi = bracket_hi;
  double flo = g(lo) - target, fhi = g(hi) - target;
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (flo * fhi > 0)
    throw BracketError("invert_monotone: target not bracketed");

  const double accept = tol * std::max(1.0, std::fabs(target));
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    // Secant proposal, clipped to the bracket interior; fall back to bisection.
    double prop = lo - flo * (hi - lo) / (fhi - flo);
    if (!(prop > lo && prop < hi)) prop = 0.5 * (lo + hi);
    x = prop;
    const double fx = g(x) - target;
    if (std::fabs(fx) <= accept) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= 4e-16 * (std::fabs(lo) + std::fabs(hi))) break;
  }
  const double fx = g(x) - target;
  if (std::fabs(fx) <= accept) return x;
  throw std::runtime_error("invert_monotone: did not reach tolerance");
}

}  // namespace ladders
