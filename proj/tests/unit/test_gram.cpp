#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ladders/gram.hpp"
#include "ladders/prime_pi.hpp"
#include "ladders/theta.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
// oracle Gram abscissae (fixtures/gram_points.csv)
constexpr double kT1 = 23.170282701246309278996643538301532;
constexpr double kT100 = 238.58259051450292332560091943842217;
constexpr double kT100000 = 74921.895130070669308865939296362479;
}  // namespace

TEST_CASE("gram_point golden values") {
  CHECK(ladders::gram_point(1).t == doctest::Approx(kT1).epsilon(1e-13));
  CHECK(ladders::gram_point(100).t == doctest::Approx(kT100).epsilon(1e-13));
  CHECK(ladders::gram_point(100000).t ==
        doctest::Approx(kT100000).epsilon(1e-12));
}

TEST_CASE("gram_point round-trips through theta") {
  for (long nu : {1L, 10L, 10000L}) {
    const auto gp = ladders::gram_point(nu);
    CHECK(std::fabs(ladders::theta(gp.t).theta - kPi * nu) <= 1e-9);
    CHECK(std::fabs(gp.theta_residual) <= 1e-9);
  }
}

TEST_CASE("gram_point requires nu >= 1") {
  CHECK_THROWS_AS(ladders::gram_point(0), std::domain_error);
}

TEST_CASE("gram points increase and nu=1e5 sits in a monotone bracket") {
  const double t0 = ladders::gram_point(99999).t;
  const double t1 = ladders::gram_point(100000).t;
  CHECK(t1 > t0);
  CHECK(t1 < t0 + 10);
  CHECK(ladders::theta(t0).theta < kPi * 100000);
  CHECK(ladders::theta(t0 + 10).theta > kPi * 100000);
}

TEST_CASE("spacing_residual: sign, sanity band and scaled bound") {
  CHECK(ladders::gram_point(101).t - ladders::gram_point(100).t > 0);

  const double t100 = ladders::gram_point(100).t;
  const double r100 = ladders::spacing_residual(100);
  CHECK(std::fabs(r100) < 2 * kPi / (std::log(t100) * std::log(t100)));

  // scaled remainder bounded over a nu sweep; frozen regression bound
  double worst = 0;
  for (long nu = 10; nu <= 10000; nu = nu * 5 / 4 + 1) {
    const double t = ladders::gram_point(nu).t;
    const double log_t = std::log(t);
    worst = std::max(worst,
                     std::fabs(ladders::spacing_residual(nu)) * log_t * log_t * log_t);
  }
  CHECK(worst < 50.0);
  CHECK(worst > 10.0);  // the residual really is a 1/ln^3 term, not smaller
}

TEST_CASE("classify_interval containment and exclusion verdicts") {
  const auto zeros = ladders::j1_zeros(100);

  // straddling: find a nu whose interval contains a Bessel zero
  bool found_straddle = false, found_admissible = false;
  for (long nu = 1; nu <= 80; ++nu) {
    const auto c = ladders::classify_interval(nu, 0.05, zeros,
                                              ladders::ExclusionMode::paper_literal);
    const double t0 = ladders::gram_point(nu).t;
    const double t1 = ladders::gram_point(nu + 1).t;
    const int n = zeros.cell_index(t0);
    if (n >= 1 && t1 > zeros.mu(n + 1)) {
      CHECK_FALSE(c.inside_bessel_cell);
      found_straddle = true;
    }
    if (c.admissible) {
      found_admissible = true;
      CHECK(c.inside_bessel_cell);
      CHECK(c.clears_exclusion_zone);
    }
    CHECK(c.sin_magnitude == doctest::Approx(std::fabs(std::sin(t0 - kPi / 4))));
  }
  CHECK(found_straddle);
  CHECK(found_admissible);

  // frozen fixture from an implementation-time scan: admissible both ways
  for (auto mode : {ladders::ExclusionMode::paper_literal,
                    ladders::ExclusionMode::sin_zeros}) {
    CHECK(ladders::classify_interval(76, 0.05, zeros, mode).admissible);
  }
}

TEST_CASE("classify_interval is pure and epsilon >= pi/2 excludes everything") {
  const auto zeros = ladders::j1_zeros(40);
  const auto a = ladders::classify_interval(7, 0.05, zeros,
                                            ladders::ExclusionMode::sin_zeros);
  const auto b = ladders::classify_interval(7, 0.05, zeros,
                                            ladders::ExclusionMode::sin_zeros);
  CHECK(a.admissible == b.admissible);
  CHECK(a.sin_magnitude == b.sin_magnitude);

  for (long nu = 1; nu <= 20; ++nu) {
    const auto c = ladders::classify_interval(nu, kPi / 2, zeros,
                                              ladders::ExclusionMode::paper_literal);
    CHECK_FALSE(c.clears_exclusion_zone);
  }
}

TEST_CASE("classify_interval needs zero-table coverage") {
  const auto zeros = ladders::j1_zeros(5);
  CHECK_THROWS_AS(ladders::classify_interval(50, 0.05, zeros,
                                             ladders::ExclusionMode::paper_literal),
                  std::out_of_range);
}

TEST_CASE("admissible intervals keep J1 sign-constant") {
  const auto zeros = ladders::j1_zeros(400);
  int tested = 0;
  for (long nu = 50; nu < 120 && tested < 10; ++nu) {
    const auto c = ladders::classify_interval(nu, 0.05, zeros,
                                              ladders::ExclusionMode::paper_literal);
    if (!c.admissible) continue;
    ++tested;
    const double t0 = ladders::gram_point(nu).t;
    const double t1 = ladders::gram_point(nu + 1).t;
    const double s0 = ladders::j1(t0) > 0 ? 1.0 : -1.0;
    for (int i = 0; i <= 16; ++i) {
      const double t = t0 + (t1 - t0) * i / 16;
      CHECK(s0 * ladders::j1(t) > 0);
    }
  }
  CHECK(tested == 10);
}

TEST_CASE("count_admissible_in_cell matches direct enumeration") {
  for (int n : {30, 100, 320}) {
    const auto zeros = ladders::j1_zeros(n + 1);
    const double lo = zeros.mu(n), hi = zeros.mu(n + 1);
    // direct enumeration
    long nu = std::max(1L, (long)std::floor(ladders::theta(lo).theta / kPi) - 2);
    while (ladders::gram_point(nu).t < lo) ++nu;
    int direct = 0;
    while (ladders::gram_point(nu + 1).t <= hi) {
      ++direct;
      ++nu;
    }
    CHECK(ladders::count_admissible_in_cell(n, 0.05) == direct);
  }
}

TEST_CASE("cell counts trend toward (1/2) ln t from below") {
  auto mean_ratio = [](int n_center) {
    double sum = 0;
    for (int n = n_center - 2; n <= n_center + 2; ++n) {
      const auto zeros = ladders::j1_zeros(n + 1);
      const double mid = (zeros.mu(n) + zeros.mu(n + 1)) / 2;
      sum += ladders::count_admissible_in_cell(n, 0.05) / (0.5 * std::log(mid));
    }
    return sum / 5;
  };
  const double near_100 = mean_ratio(32);    // cells around t ~ 1e2
  const double near_3000 = mean_ratio(955);  // cells around t ~ 3e3
  CHECK(near_3000 > near_100);
  CHECK(near_3000 < 1.2);
}

TEST_CASE("prime counting") {
  CHECK(ladders::prime_pi(10) == 4);
  CHECK(ladders::prime_pi(100) == 25);
  CHECK(ladders::prime_pi(1e6) == 78498);
  CHECK_THROWS_AS(ladders::prime_pi(1e9), std::out_of_range);
  const ladders::PrimeCounter counter(1000);
  CHECK(counter.count_up_to(1000) == 168);
  CHECK(counter.count_up_to(2) == 1);
  CHECK_THROWS_AS(counter.count_up_to(1001), std::out_of_range);
}
