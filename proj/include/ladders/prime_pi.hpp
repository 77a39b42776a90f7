#pragma once

#include <vector>

namespace ladders {

/// Compact prime-counting table built by a sieve of Eratosthenes.
class PrimeCounter {
 public:
  explicit PrimeCounter(long limit);

  long limit() const { return limit_; }
  /// pi(t): number of primes <= t.  Requires 0 <= t <= limit.
  long count_up_to(double t) const;

 private:
  long limit_;
  std::vector<long> primes_;
};

/// pi(t) against a process-wide table sized for the supported abscissa range.
/// Throws std::out_of_range beyond the built limit (1e6 + margin).
long prime_pi(double t);

}  // namespace ladders
