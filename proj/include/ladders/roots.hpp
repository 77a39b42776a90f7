#pragma once

#include <functional>
#include <stdexcept>

namespace ladders {

struct BracketError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotMonotoneError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Solve g(x) = target for a function monotone on [bracket_lo, bracket_hi].
///
/// Monotonicity is spot-checked on a coarse interior sample; the bracket must
/// straddle the target.  Returns x with |g(x) - target| <= tol * max(1, |target|).
/// Safeguarded secant/bisection, so a poor derivative cannot escape the bracket.
double invert_monotone(const std::function<double(double)>& g, double target,
                       double bracket_lo, double bracket_hi, double tol);

}  // namespace ladders
