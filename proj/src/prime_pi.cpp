#include "ladders/prime_pi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ladders {

PrimeCounter::PrimeCounter(long limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("PrimeCounter: limit must be >= 2");
  std::vector<bool> composite(limit + 1, false);
  for (long p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (long m = p * p; m <= limit; m += p) composite[m] = true;
  }
  for (long n = 2; n <= limit; ++n) {
    if (!composite[n]) primes_.push_back(n);
  }
}

long PrimeCounter::count_up_to(double t) const {
  if (!(t >= 0) || t > static_cast<double>(limit_))
    throw std::out_of_range("PrimeCounter: t outside [0, " +
                            std::to_string(limit_) + "]");
  const long n = static_cast<long>(std::floor(t));
  auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
  return static_cast<long>(it - primes_.begin());
}

long prime_pi(double t) {
  static const PrimeCounter counter(1100000);
  if (t < 2) throw std::out_of_range("prime_pi: requires t >= 2");
  return counter.count_up_to(t);
}

}  // namespace ladders
