#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ladders/quadrature.hpp"
#include "ladders/roots.hpp"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("integral of sin over [0, pi] is 2") {
  const auto r = ladders::integrate([](double x) { return std::sin(x); }, 0,
                                    kPi, 1e-13);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.error_estimate >= 0);
  CHECK(r.panels >= 1);
}

TEST_CASE("empty interval integrates to zero with zero error") {
  const auto r = ladders::integrate([](double x) { return x; }, 3.0, 3.0, 1e-9);
  CHECK(r.value == 0.0);
  CHECK(r.error_estimate == 0.0);
}

TEST_CASE("invalid arguments") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(ladders::integrate(f, 1.0, 0.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(ladders::integrate(f, 0.0, 1.0, -1e-9), std::invalid_argument);
}

TEST_CASE("NaN from the integrand is a distinct error") {
  auto f = [](double x) { return x < 0.5 ? 1.0 : std::nan(""); };
  CHECK_THROWS_AS(ladders::integrate(f, 0.0, 1.0, 1e-9),
                  ladders::IntegrandNanError);
}

TEST_CASE("budget exhaustion carries the best estimate") {
  auto nasty = [](double x) { return std::sin(1 / (x + 1e-7)); };
  try {
    ladders::integrate(nasty, 0.0, 1.0, 1e-14, {}, 0.0, 2000);
    FAIL("expected QuadratureBudgetError");
  } catch (const ladders::QuadratureBudgetError& e) {
    CHECK(e.best.evaluations <= 2000);
    CHECK(e.best.error_estimate > 0);
    CHECK(std::isfinite(e.best.value));
  }
}

TEST_CASE("wavelength hint forces initial resolution") {
  // fast oscillation inside a wide interval
  auto f = [](double x) { return std::cos(40 * x); };
  const auto hinted = ladders::integrate(f, 0, 20, 1e-10, 2 * kPi / 40);
  CHECK(hinted.value ==
        doctest::Approx(std::sin(40 * 20.0) / 40).epsilon(1e-8));
}

TEST_CASE("additivity across random split points") {
  std::mt19937 rng(20260808);
  std::uniform_real_distribution<double> mid(0.1, 0.9);
  auto f = [](double x) { return std::cos(3 * x) + x * x; };
  for (int i = 0; i < 20; ++i) {
    const double a = -1, c = 4;
    const double b = a + (c - a) * mid(rng);
    const auto whole = ladders::integrate(f, a, c, 1e-11);
    const auto left = ladders::integrate(f, a, b, 1e-11);
    const auto right = ladders::integrate(f, b, c, 1e-11);
    const double budget = whole.error_estimate + left.error_estimate +
                          right.error_estimate + 1e-14;
    CHECK(std::fabs(whole.value - (left.value + right.value)) <= budget);
  }
}

TEST_CASE("error estimates are honest on a known-antiderivative family") {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  long total = 0, honest = 0;
  auto run = [&](auto f, auto antiderivative, double lo_min, double lo_max) {
    for (int i = 0; i < 100; ++i) {
      const double a = lo_min + (lo_max - lo_min) * u(rng);
      const double b = a + 0.1 + 8 * u(rng);
      const auto r = ladders::integrate(f, a, b, 1e-10);
      const double truth = antiderivative(b) - antiderivative(a);
      ++total;
      if (std::fabs(r.value - truth) <= 10 * r.error_estimate) ++honest;
    }
  };
  run([](double x) { return std::cos(x); },
      [](double x) { return std::sin(x); }, -4, 4);
  run([](double x) { return 1 / (1 + x * x); },
      [](double x) { return std::atan(x); }, -3, 3);
  run([](double x) { return x * x * x * x * x - 3 * x * x; },
      [](double x) { return x * x * x * x * x * x / 6 - x * x * x; }, -2, 2);
  run([](double x) { return std::exp(-x); },
      [](double x) { return -std::exp(-x); }, 0, 2);
  CHECK(total == 400);
  CHECK(honest >= 396);  // >= 99%
}

TEST_CASE("invert_monotone basics") {
  auto identity = [](double x) { return x; };
  CHECK(ladders::invert_monotone(identity, 5.0, 0.0, 10.0, 1e-12) ==
        doctest::Approx(5.0).epsilon(1e-12));

  auto cube = [](double x) { return x * x * x; };
  CHECK(ladders::invert_monotone(cube, 8.0, 0.0, 3.0, 1e-13) ==
        doctest::Approx(2.0).epsilon(1e-10));

  auto decreasing = [](double x) { return -2 * x + 1; };
  CHECK(ladders::invert_monotone(decreasing, 0.0, -5.0, 5.0, 1e-13) ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("invert_monotone rejects bad input") {
  auto parabola = [](double x) { return x * x; };
  CHECK_THROWS_AS(ladders::invert_monotone(parabola, 1.0, -2.0, 2.0, 1e-12),
                  ladders::NotMonotoneError);
  auto identity = [](double x) { return x; };
  CHECK_THROWS_AS(ladders::invert_monotone(identity, 50.0, 0.0, 10.0, 1e-12),
                  ladders::BracketError);
  CHECK_THROWS_AS(ladders::invert_monotone(identity, 5.0, 10.0, 0.0, 1e-12),
                  ladders::BracketError);
}

#include "ladders/gram.hpp"
#include "ladders/ladder.hpp"
#include "ladders/theta.hpp"

TEST_CASE("invert_monotone on theta reproduces gram_point") {
  const auto gp = ladders::gram_point(5);
  const double t = ladders::invert_monotone(
      [](double x) { return ladders::theta(x).theta; }, 5 * kPi, 30.0, 50.0,
      1e-12);
  CHECK(t == doctest::Approx(gp.t).epsilon(1e-10));
}

TEST_CASE("invert_monotone agrees with the ladder's own inversion") {
  static const auto table =
      ladders::build_ladder(ladders::LadderOrder::first, 1000, 1060, 1e-9);
  for (double x : {935.0, 950.0, 970.0}) {
    const double via_roots = ladders::invert_monotone(
        [&](double t) { return table.value(t); }, x, table.t_min(),
        table.t_max(), 1e-13);
    CHECK(std::fabs(via_roots - table.inverse(x)) <= 1e-9);
  }
}
