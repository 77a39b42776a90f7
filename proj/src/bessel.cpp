#include "ladders/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ladders {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesAsymptoticSeam = 16.0;

// Minimal double-double helpers.  The power series suffers ~1e4-fold
// cancellation near the seam; carrying the term recurrence and the sum in
// twofold precision keeps the branch exact to double resolution there.
struct DD {
  double hi, lo;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_norm(double hi, double lo) {
  const double s = hi + lo;
  return {s, lo - (s - hi)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  return quick_norm(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  return quick_norm(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_div_d(DD a, double b) {
  const double q = a.hi / b;
  const DD p = two_prod(q, b);
  const double err = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return quick_norm(q, err);
}

// J0 and J1 power series with q = x^2/4:
//   J0 = sum (-q)^k / (k!)^2       J1 = (x/2) sum (-q)^k / (k! (k+1)!)
double bessel_series(int order, double x) {
  const DD xsq = two_prod(x, x);
  const DD q = {0.25 * xsq.hi, 0.25 * xsq.lo};
  DD term = {1.0, 0.0};
  DD sum = {1.0, 0.0};
  double sign = -1;
  for (int k = 1; k < 90; ++k) {
    term = dd_mul(term, q);
    term = dd_div_d(term, order == 0 ? double(k) * k : double(k) * (k + 1));
    sum = dd_add(sum, {sign * term.hi, sign * term.lo});
    if (std::fabs(term.hi) < 1e-40) break;
    sign = -sign;
  }
  if (order == 0) return sum.hi + sum.lo;
  const DD half_x_sum = dd_mul(sum, {0.5 * x, 0.0});
  return half_x_sum.hi + half_x_sum.lo;
}

// Hankel expansion: J_nu = sqrt(2/(pi x)) [cos(chi) P - sin(chi) Q],
// chi = x - nu pi/2 - pi/4, with a_k = prod (4nu^2 - (2j-1)^2) / (k! 8^k).
double bessel_asymptotic(int order, double x) {
  const double mu = 4.0 * order * order;
  double p_sum = 1, q_sum = 0;
  double term = 1;
  double prev_mag = 1e300;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    const double mag = std::fabs(term);
    if (mag > prev_mag) break;  // asymptotic tail starts growing
    prev_mag = mag;
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 1) {
      q_sum += signed_term;
    } else {
      p_sum += signed_term;
    }
    if (mag < 1e-19) break;
  }
  const double chi = x - order * kPi / 2 - kPi / 4;
  return std::sqrt(2 / (kPi * x)) *
         (std::cos(chi) * p_sum - std::sin(chi) * q_sum);
}

double bessel_j(int order, double x) {
  if (x < 0) throw std::domain_error("bessel: requires x >= 0");
  return x <= kSeriesAsymptoticSeam ? bessel_series(order, x)
                                    : bessel_asymptotic(order, x);
}

}  // namespace

double j0(double x) { return bessel_j(0, x); }
double j1(double x) { return bessel_j(1, x); }

namespace detail {
double j0_series(double x) { return bessel_series(0, x); }
double j1_series(double x) { return bessel_series(1, x); }
double j0_asymptotic(double x) { return bessel_asymptotic(0, x); }
double j1_asymptotic(double x) { return bessel_asymptotic(1, x); }
}  // namespace detail

int BesselZeroTable::cell_index(double x) const {
  auto it = std::upper_bound(zeros.begin(), zeros.end(), x);
  return static_cast<int>(it - zeros.begin());
}

BesselZeroTable j1_zeros(int count) {
  if (count < 1) throw std::invalid_argument("j1_zeros: count must be >= 1");
  BesselZeroTable table;
  table.zeros.reserve(count);
  for (int n = 1; n <= count; ++n) {
    // McMahon seed; the true zero sits just below (n + 1/4) pi.
    const double beta = (n + 0.25) * kPi;
    double lo = beta - 0.45, hi = beta + 0.2;
    double flo = j1(lo), fhi = j1(hi);
    for (int widen = 0; flo * fhi > 0 && widen < 6; ++widen) {
      lo -= 0.15;
      hi += 0.15;
      flo = j1(lo);
      fhi = j1(hi);
    }
    if (flo * fhi > 0)
      throw std::runtime_error("j1_zeros: failed to bracket zero " +
                               std::to_string(n));
    for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = j1(mid);
      if (flo * fm <= 0) {
        hi = mid;
        fhi = fm;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    const double zero = 0.5 * (lo + hi);
    if (!table.zeros.empty() && zero <= table.zeros.back())
      throw std::runtime_error("j1_zeros: ordering violated");
    table.zeros.push_back(zero);
  }
  return table;
}

double j1_definite_integral(double a, double b) {
  if (a < 0) throw std::domain_error("j1_definite_integral: requires a >= 0");
  if (b < a)
    throw std::invalid_argument("j1_definite_integral: requires a <= b");
  return j0(a) - j0(b);
}

double j0_asymptotic_difference(double t_lo, double t_hi) {
  if (!(t_lo > 0) || t_hi < t_lo)
    throw std::invalid_argument(
        "j0_asymptotic_difference: requires 0 < t_lo <= t_hi");
  return std::sqrt(2 / (kPi * t_lo)) *
         (std::cos(t_lo - kPi / 4) - std::cos(t_hi - kPi / 4));
}

}  // namespace ladders
