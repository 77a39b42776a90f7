// Reference-value generator for the golden fixtures under fixtures/.
//
// Every number emitted here is computed from scratch in 50-digit
// arithmetic (Boost.Multiprecision cpp_bin_float), with methods chosen
// to be independent of the main library:
//
//   theta      Stirling series for Im ln Gamma with an upward recurrence
//              shift (all shifted points have positive real part, so the
//              per-factor principal args need no branch tracking)
//   zeta, Z    Euler-Maclaurin summation at s = 1/2 + it
//   J0, J1     integral representation (1/pi) int_0^pi cos(m x - t sin x) dx
//              via the trapezoidal rule, which converges geometrically here
//   pi(t)      trial division
//
// The main library never validates against its own output; it validates
// against the CSV files this program writes.
//
// Usage: zetaladder-oracle [output-dir]     (default: fixtures)

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Cplx = mp::cpp_complex_50;

namespace {

const Real kPi = acos(Real(-1));
const Real kLogSqrt2Pi = log(2 * kPi) / 2;

// ---------------------------------------------------------------- Bernoulli

// B_2 .. B_40 as exact rationals.
struct BernoulliTable {
  std::vector<Real> b;  // b[k] = B_{2k}, k = 1..20; b[0] unused

  BernoulliTable() {
    auto rat = [](const char* n, const char* d) { return Real(n) / Real(d); };
    b = {0,
         rat("1", "6"),
         rat("-1", "30"),
         rat("1", "42"),
         rat("-1", "30"),
         rat("5", "66"),
         rat("-691", "2730"),
         rat("7", "6"),
         rat("-3617", "510"),
         rat("43867", "798"),
         rat("-174611", "330"),
         rat("854513", "138"),
         rat("-236364091", "2730"),
         rat("8553103", "6"),
         rat("-23749461029", "870"),
         rat("8615841276005", "14322"),
         rat("-7709321041217", "510"),
         rat("2577687858367", "6"),
         rat("-26315271553053477373", "1919190"),
         rat("2929993913841559", "6"),
         rat("-261082718496449122051", "13530")};
  }

  // Cross-check the table against B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2pi)^{2k}
  // using a direct zeta sum with the leading tail correction.  A transcription
  // slip anywhere above would show up at ~1e-40.
  void self_check() const {
    Real fact = 2;  // (2k)! accumulator, k = 1
    for (int k = 2; k <= 20; ++k) {
      fact *= (2 * k) * (2 * k - 1);
      if (k < 5) continue;  // small ones are textbook; direct sum too slow
      const int m = 20000;
      Real zeta2k = 0;
      for (int n = m; n >= 1; --n) zeta2k += pow(Real(n), -2 * k);
      zeta2k += pow(Real(m), 1 - 2 * k) / (2 * k - 1) - pow(Real(m), -2 * k) / 2;
      Real expect = 2 * fact * zeta2k / pow(2 * kPi, 2 * k);
      if (k % 2 == 0) expect = -expect;
      if (abs((expect - b[k]) / b[k]) > Real("1e-40")) {
        std::cerr << "Bernoulli self-check FAILED at B_" << 2 * k << "\n";
        std::exit(1);
      }
    }
    std::cerr << "Bernoulli table self-check ok\n";
  }
};

const BernoulliTable kB;

// ------------------------------------------------------------------- theta

// Im ln Gamma(a + i b) for a > 0, b >= 0.
Real im_log_gamma(Real a, Real b) {
  Cplx z(a, b);
  Real arg_sum = 0;
  while (abs(z) < 80) {
    arg_sum += atan2(z.imag().convert_to<Real>(), z.real().convert_to<Real>());
    z += 1;
  }
  Cplx lg = (z - Cplx(Real(1) / 2)) * log(z) - z + kLogSqrt2Pi;
  const Cplx z2 = z * z;
  Cplx zp = z;
  for (int k = 1; k <= 20; ++k) {
    lg += kB.b[k] / (Real(2 * k) * (2 * k - 1)) / zp;
    zp *= z2;
  }
  return lg.imag().convert_to<Real>() - arg_sum;
}

Real theta_mp(Real t) {
  return -t / 2 * log(kPi) + im_log_gamma(Real(1) / 4, t / 2);
}

// -------------------------------------------------------------------- zeta

// zeta(1/2 + it) by Euler-Maclaurin.  `mult` scales the cutoff N; 3 gives
// ~50 correct digits, 1 is enough for sign counting.
Cplx zeta_half_mp(Real t, int mult = 3) {
  const Cplx s(Real(1) / 2, t);
  const long n_cut = std::max<long>(50, (long)ceil((mult * t).convert_to<double>()) + 20);
  Cplx sum = 0;
  for (long n = n_cut - 1; n >= 1; --n) {
    Real ln_n = log(Real(n));
    sum += exp(-s * ln_n);
  }
  const Real nr(n_cut);
  sum += exp((Cplx(1) - s) * log(nr)) / (s - 1);
  sum += exp(-s * log(nr)) / 2;

  Cplx p = s;                                 // s(s+1)...(s+2k-2)
  Cplx npow = exp((-s - 1) * log(nr));        // N^{1-s-2k}, k=1
  Real fact = 2;                              // (2k)!
  Cplx last = 0;
  for (int k = 1; k <= 20; ++k) {
    last = kB.b[k] / fact * p * npow;
    sum += last;
    p *= (s + (2 * k - 1)) * (s + 2 * k);
    npow /= nr * nr;
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  if (abs(last) > Real("1e-45") * abs(sum))
    std::cerr << "warning: EM tail not negligible at t=" << t << "\n";
  return sum;
}

Real hardy_z_mp(Real t, int mult = 3) {
  Real th = theta_mp(t);
  Cplx z = Cplx(cos(th), sin(th)) * zeta_half_mp(t, mult);
  if (mult >= 3 && abs(z.imag().convert_to<Real>()) >
                       Real("1e-38") * (abs(z) + 1)) {
    std::cerr << "warning: Im Z not negligible at t=" << t << " : "
              << z.imag() << "\n";
  }
  return z.real().convert_to<Real>();
}

// ------------------------------------------------------------------ bessel

// J_m(x) via (1/pi) int_0^pi cos(m u - x sin u) du, trapezoidal rule.
Real bessel_j_mp(int m, Real x) {
  const long n_pts = (long)ceil((Real("1.15") * x).convert_to<double>()) + 420;
  const Real h = kPi / n_pts;
  Real sum = (cos(Real(0)) + cos(m * kPi)) / 2;  // endpoints: u=0 and u=pi
  for (long j = 1; j < n_pts; ++j) {
    Real u = h * j;
    sum += cos(m * u - x * sin(u));
  }
  return sum * h / kPi;
}

Real j1_zero_mp(int n) {
  Real beta = (n + Real(1) / 4) * kPi;
  Real lo = beta - Real("0.4"), hi = beta + Real("0.15");
  Real flo = bessel_j_mp(1, lo), fhi = bessel_j_mp(1, hi);
  while (flo * fhi > 0) {  // widen; should not trigger for n >= 1
    lo -= Real("0.1");
    hi += Real("0.1");
    flo = bessel_j_mp(1, lo);
    fhi = bessel_j_mp(1, hi);
  }
  for (int it = 0; it < 30; ++it) {
    Real mid = (lo + hi) / 2, fm = bessel_j_mp(1, mid);
    if (flo * fm <= 0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  Real x = (lo + hi) / 2;
  for (int it = 0; it < 6; ++it) {  // Newton: J1' = J0 - J1/x
    Real f = bessel_j_mp(1, x);
    Real df = bessel_j_mp(0, x) - f / x;
    x -= f / df;
  }
  return x;
}

// -------------------------------------------------------------------- gram

Real gram_point_mp(long nu) {
  Real lo = 10, hi = Real("2e7");
  Real target = kPi * nu;
  for (int it = 0; it < 90; ++it) {
    Real mid = (lo + hi) / 2;
    (theta_mp(mid) < target ? lo : hi) = mid;
  }
  Real t = (lo + hi) / 2;
  for (int it = 0; it < 5; ++it) {  // polish; theta' ~ log(t/2pi)/2
    Real dtheta = log(t / (2 * kPi)) / 2;
    t -= (theta_mp(t) - target) / dtheta;
  }
  return t;
}

// ------------------------------------------------------------------ primes

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

// ------------------------------------------------------------------ output

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_mp(const Real& v, int digits = 35) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path out_dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(out_dir);
  kB.self_check();

  std::ofstream notes(out_dir / "reference_constants.txt");
  notes << "# reference constants, 50-digit oracle run; values printed to 35 digits\n";

  // --- theta / Z fixture -------------------------------------------------
  {
    std::cerr << "theta_z.csv ...\n";
    std::ofstream f(out_dir / "theta_z.csv");
    f << "t,theta,z,source_digits\n";
    const double grid[] = {5,    10,   14.134725141734694, 17.845599540910806,
                           20,   25,   30,                 50,
                           75,   100,  150,                200,
                           350,  500,  1000,               2000,
                           5000, 1e4,  3e4,                1e5,
                           3e5,  1e6};
    for (double td : grid) {
      Real t(td);
      Real th = theta_mp(t);
      Real z = hardy_z_mp(t);
      int digits = td > 2e5 ? 40 : 45;  // huge-phase rows lose a few digits
      f << fmt_double(td) << ',' << fmt_mp(th) << ',' << fmt_mp(z) << ','
        << digits << '\n';
      std::cerr << "  t=" << td << " done\n";
    }
  }

  // --- Bessel J1 zeros ----------------------------------------------------
  {
    std::cerr << "bessel_zeros.csv ...\n";
    std::ofstream f(out_dir / "bessel_zeros.csv");
    f << "n,mu,source_digits\n";
    Real mu1 = 0, mu2 = 0;
    for (int n = 1; n <= 60; ++n) {
      Real mu = j1_zero_mp(n);
      if (n == 1) mu1 = mu;
      if (n == 2) mu2 = mu;
      f << n << ',' << fmt_mp(mu) << ",45\n";
    }
    for (int n : {100, 101, 150, 200}) {
      f << n << ',' << fmt_mp(j1_zero_mp(n)) << ",45\n";
    }
    notes << "mu_1 " << fmt_mp(mu1) << "\n";
    notes << "mu_2 " << fmt_mp(mu2) << "\n";
    notes << "j0_at_mu_1 " << fmt_mp(bessel_j_mp(0, mu1)) << "\n";
    notes << "j0_1000 " << fmt_mp(bessel_j_mp(0, Real(1000))) << "\n";
    notes << "j1_1000 " << fmt_mp(bessel_j_mp(1, Real(1000))) << "\n";
    notes << "j0_16 " << fmt_mp(bessel_j_mp(0, Real(16))) << "\n";
    notes << "j1_16 " << fmt_mp(bessel_j_mp(1, Real(16))) << "\n";
    notes << "j0_1e5 " << fmt_mp(bessel_j_mp(0, Real(100000))) << "\n";
    notes << "j1_1e5 " << fmt_mp(bessel_j_mp(1, Real(100000))) << "\n";
  }

  // --- Gram points ----------------------------------------------------------
  {
    std::cerr << "gram_points.csv ...\n";
    std::ofstream f(out_dir / "gram_points.csv");
    f << "nu,t,source_digits\n";
    for (long nu : {1L, 2L, 3L, 4L, 5L, 10L, 20L, 50L, 100L, 300L, 1000L,
                    3000L, 10000L, 30000L, 100000L}) {
      Real t = gram_point_mp(nu);
      f << nu << ',' << fmt_mp(t) << ",45\n";
      if (nu == 1) notes << "gram_t1 " << fmt_mp(t) << "\n";
    }
  }

  // --- prime counting -------------------------------------------------------
  {
    std::cerr << "prime_pi.csv ...\n";
    std::ofstream f(out_dir / "prime_pi.csv");
    f << "t,pi\n";
    std::uint64_t count = 0, next_mark = 10;
    for (std::uint64_t n = 2; n <= 1000000; ++n) {
      if (is_prime_trial(n)) ++count;
      if (n == next_mark) {
        f << n << ',' << count << '\n';
        next_mark *= 10;
      }
    }
  }

  // --- scalar reference constants -------------------------------------------
  {
    std::cerr << "scalar constants ...\n";
    // zero crossing of theta near 17.85
    {
      Real lo = 17, hi = Real("18.2");
      for (int it = 0; it < 170; ++it) {
        Real mid = (lo + hi) / 2;
        (theta_mp(mid) < 0 ? lo : hi) = mid;
      }
      notes << "theta_zero_t " << fmt_mp((lo + hi) / 2) << "\n";
    }
    // first nontrivial zeta zero
    {
      Real lo = 14, hi = Real("14.3");
      Real flo = hardy_z_mp(lo);
      for (int it = 0; it < 170; ++it) {
        Real mid = (lo + hi) / 2;
        Real fm = hardy_z_mp(mid);
        if (flo * fm <= 0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      notes << "zeta_zero_1 " << fmt_mp((lo + hi) / 2) << "\n";
    }
    // number of sign changes of Z on [100, 200], two grid resolutions
    {
      auto count_changes = [](double step) {
        long n = 0;
        Real prev = hardy_z_mp(Real(100), 1);
        for (double x = 100 + step; x <= 200 + step / 2; x += step) {
          Real cur = hardy_z_mp(Real(x), 1);
          if (prev * cur < 0) ++n;
          prev = cur;
        }
        return n;
      };
      long c1 = count_changes(0.05), c2 = count_changes(0.03);
      notes << "z_sign_changes_100_200_step05 " << c1 << "\n";
      notes << "z_sign_changes_100_200_step03 " << c2 << "\n";
      if (c1 != c2) notes << "z_sign_changes_DISAGREE 1\n";
    }
    notes << "theta_1000 " << fmt_mp(theta_mp(Real(1000))) << "\n";
    notes << "theta_asym_gap_x_t_100 "
          << fmt_mp((theta_mp(Real(100)) -
                     (Real(50) * log(Real(100) / (2 * kPi)) - 50 - kPi / 8)) *
                    100)
          << "\n";
    notes << "theta_asym_gap_x_t_1000 "
          << fmt_mp((theta_mp(Real(1000)) -
                     (Real(500) * log(Real(1000) / (2 * kPi)) - 500 - kPi / 8)) *
                    1000)
          << "\n";
  }

  std::cerr << "oracle done -> " << out_dir << "\n";
  return 0;
}
