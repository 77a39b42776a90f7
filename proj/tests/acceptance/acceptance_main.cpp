// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance [--criterion N] [--fixtures DIR]
//
// Criteria (tolerances pinned in code; regression constants were measured
// against the 50-digit fixtures on first implementation and frozen with
// ~25% headroom):
//    1  Gram spacing law, scaled remainder bounded
//    2  closed-form integral of J1 vs quadrature, 100 pairs
//    3  J1 zero spacing approaches pi
//    4  substitution identity within summed quadrature estimates
//    5  exact mid-chain identity over a 200-interval campaign
//    6  scaled chain remainders bounded over nu in [100, 1e4]
//    7  first-theorem ratio trend between decade bands
//    8  Gram-interval count per Bessel cell vs (1/2) ln t
//    9  second-order window: midchain exactness, ratio band, doubling trend
//   10  golden fixtures reproduced
//
// Exit code: number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "ladders/bessel.hpp"
#include "ladders/fixtures.hpp"
#include "ladders/gram.hpp"
#include "ladders/ladder.hpp"
#include "ladders/theta.hpp"
#include "ladders/verify.hpp"

namespace {

using namespace ladders;
constexpr double kPi = std::numbers::pi;

std::string g_fixture_dir;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what + (ok ? "" : " [FAILED]");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// Ladders are shared across criteria; built on first use.
const LadderTable& ladder_low() {  // covers Gram range t in [500, 1010]
  static const LadderTable t = build_ladder(LadderOrder::first, 520, 1290, 1e-9);
  return t;
}
const LadderTable& ladder_mid() {  // covers the 200-interval campaign at t ~ 2000
  static const LadderTable t = build_ladder(LadderOrder::first, 2050, 2400, 1e-9);
  return t;
}
const LadderTable& ladder_high() {  // covers Gram range t in [5000, 10010]
  static const LadderTable t = build_ladder(LadderOrder::first, 5050, 11600, 1e-9);
  return t;
}
const LadderTable& ladder_subst_1e4() {
  static const LadderTable t = build_ladder(LadderOrder::first, 9940, 12060, 1e-9);
  return t;
}
const LadderTable& ladder2_1e4() {
  static const LadderTable t = build_ladder(LadderOrder::second, 9900, 10480, 1e-8);
  return t;
}
const LadderTable& ladder2_2e4() {
  static const LadderTable t = build_ladder(LadderOrder::second, 19900, 20700, 1e-8);
  return t;
}

long first_gram_index_at(double t) {
  return static_cast<long>(std::ceil(theta(t).theta / kPi));
}

// ---------------------------------------------------------------- criteria

// 1. |spacing - two-term law| * ln^3 t bounded (measured sup 37.1, frozen 47).
Outcome criterion_gram_spacing() {
  Outcome o;
  double sup = 0;
  for (int i = 0; i <= 40; ++i) {
    const long nu =
        static_cast<long>(std::llround(10.0 * std::pow(1000.0, i / 40.0)));
    const double t = gram_point(nu).t;
    const double lt = std::log(t);
    sup = std::max(sup, std::fabs(spacing_residual(nu)) * lt * lt * lt);
  }
  note(o, sup <= 47.0, "sup |residual|*ln^3 t = " + fmt(sup) + " (bound 47)");
  return o;
}

// 2. quadrature of J1 equals J0(a) - J0(b) within 1e-10, 100 pairs in (0,500).
Outcome criterion_bessel_identity() {
  Outcome o;
  double worst = 0;
  double frac_a = 0.0, frac_b = 0.5;
  for (int i = 0; i < 100; ++i) {
    frac_a = std::fmod(frac_a + 0.6180339887498949, 1.0);
    frac_b = std::fmod(frac_b + 0.7548776662466927, 1.0);
    double a = 0.25 + 499.5 * frac_a;
    double b = 0.25 + 499.5 * frac_b;
    if (a > b) std::swap(a, b);
    const auto q = integrate([](double x) { return ladders::j1(x); }, a, b,
                             1e-12, kPi);
    worst = std::max(worst, std::fabs(q.value - j1_definite_integral(a, b)));
  }
  note(o, worst <= 1e-10, "worst |quad - closed form| = " + fmt(worst));
  return o;
}

// 3. zero spacing: |mu_101 - mu_100 - pi| < 1e-3, decreasing from n=5 to 100.
Outcome criterion_zero_spacing() {
  Outcome o;
  const auto table = j1_zeros(101);
  auto gap = [&](int n) { return std::fabs(table.mu(n + 1) - table.mu(n) - kPi); };
  note(o, gap(100) < 1e-3, "|spacing(100) - pi| = " + fmt(gap(100)));
  double prev = gap(5);
  bool decreasing = true;
  for (int n : {10, 20, 40, 70, 100}) {
    decreasing = decreasing && gap(n) < prev;
    prev = gap(n);
  }
  note(o, decreasing, "|spacing - pi| decreasing along n = 5..100");
  return o;
}

// 4. substitution identity: |lhs - rhs| <= 3 * summed quadrature estimates.
Outcome criterion_substitution() {
  Outcome o;
  const std::pair<const char*, std::function<double(double)>> family[] = {
      {"1", [](double) { return 1.0; }},
      {"x", [](double x) { return x; }},
      {"J1", [](double x) { return ladders::j1(x); }},
      {"cos", [](double x) { return std::cos(x); }},
  };
  for (double T : {1e3, 1e4}) {
    const LadderTable& table = T == 1e3 ? ladder_low() : ladder_subst_1e4();
    for (double U : {10.0, T / std::log(T)}) {
      for (const auto& [name, f] : family) {
        const auto s = substitution_check(table, f, T, U, 1e-9);
        const double budget = 3 * (s.lhs_error_estimate + s.rhs_error_estimate);
        const bool ok = std::fabs(s.lhs - s.rhs) <= budget;
        if (!ok || (T == 1e4 && U > 1000 && std::strcmp(name, "J1") == 0)) {
          note(o, ok,
               std::string("f=") + name + " T=" + fmt(T) + " U=" + fmt(U) +
                   " |lhs-rhs|=" + fmt(std::fabs(s.lhs - s.rhs)) +
                   " budget=" + fmt(budget));
        } else if (!o.pass) {
          // keep output compact once a failure is recorded
        }
      }
    }
  }
  if (o.pass && o.detail.empty()) o.detail = "16 (f, T, U) combinations within budget";
  return o;
}

// 5. exact mid-chain identity over 200 intervals near t ~ 2000:
//    relative error <= 1e-8, guarded when |rhs| < 1e-10.
Outcome criterion_midchain() {
  Outcome o;
  const long nu0 = first_gram_index_at(2001.0);
  CampaignSpec spec;
  spec.nu_from = nu0;
  spec.nu_to = nu0 + 199;
  spec.rel_tol = 1e-10;
  spec.jobs = 2;
  const auto records = run_thm1_campaign(ladder_mid(), spec);
  double worst_rel = 0;
  int guarded = 0, tested = 0;
  for (const auto& r : records) {
    if (r.kind != RecordKind::thm1_exact_midchain) continue;
    if (std::fabs(r.rhs) < 1e-10) {
      ++guarded;
      continue;
    }
    ++tested;
    worst_rel = std::max(worst_rel, std::fabs(r.lhs - r.rhs) / std::fabs(r.rhs));
  }
  note(o, tested >= 190 && worst_rel <= 1e-8,
       "intervals=" + std::to_string(tested) + " guarded=" +
           std::to_string(guarded) + " worst relative = " + fmt(worst_rel));
  return o;
}

// 6. scaled chain remainders over nu in [100, 1e4]
//    (measured sups 4.70 / 0.587 / 34.8 / 27.7, frozen 6 / 0.75 / 44 / 35).
Outcome criterion_chain_remainders() {
  Outcome o;
  double c36 = 0, c37 = 0, c38 = 0, c39 = 0;
  double t_prev = gram_point(100).t;
  for (long nu = 100; nu <= 10000; ++nu) {
    const double t0 = t_prev;
    const double t1 = gram_point(nu + 1).t;
    t_prev = t1;
    const double lt = std::log(t0);
    const double sq = std::sqrt(t0);
    const double j0d = j1_definite_integral(t0, t1);
    const double cosd = std::cos(t0 - kPi / 4) - std::cos(t1 - kPi / 4);
    c36 = std::max(c36, std::fabs(1 / std::sqrt(t1) - 1 / sq) * t0 * sq * lt);
    c37 = std::max(c37, std::fabs(j0d - std::sqrt(2 / (kPi * t0)) * cosd) * t0 * sq);
    c38 = std::max(c38,
                   std::fabs(cosd - 2 * kPi / lt * std::sin(t0 - kPi / 4)) * lt * lt);
    c39 = std::max(c39, std::fabs(j0d - 2 * std::sqrt(2 * kPi) / (sq * lt) *
                                            std::sin(t0 - kPi / 4)) *
                            sq * lt * lt);
  }
  note(o, c36 <= 6.0, "sup t^1.5 ln t |r36| = " + fmt(c36) + " (bound 6)");
  note(o, c37 <= 0.75, "sup t^1.5 |r37| = " + fmt(c37) + " (bound 0.75)");
  note(o, c38 <= 44.0, "sup ln^2 t |r38| = " + fmt(c38) + " (bound 44)");
  note(o, c39 <= 35.0, "sup sqrt(t) ln^2 t |r39| = " + fmt(c39) + " (bound 35)");
  return o;
}

// 7. first-theorem trend: median |ratio - 1| over admissible intervals is
//    strictly smaller for t in [5e3, 1e4] than for t in [5e2, 1e3],
//    in both exclusion modes.  The underlying error is O(ln ln t / ln t),
//    so only the trend is asserted.
Outcome criterion_thm1_trend() {
  Outcome o;
  auto band_median = [&](const LadderTable& table, double t_lo, double t_hi,
                         ExclusionMode mode) {
    CampaignSpec spec;
    spec.nu_from = first_gram_index_at(t_lo);
    spec.nu_to = first_gram_index_at(t_hi) - 1;
    spec.mode = mode;
    spec.rel_tol = 1e-7;
    spec.jobs = 2;
    const auto records = run_thm1_campaign(table, spec);
    std::vector<double> dev;
    for (const auto& r : records) {
      if (r.kind == RecordKind::thm1 && r.admissible && r.ratio)
        dev.push_back(std::fabs(*r.ratio - 1));
    }
    std::sort(dev.begin(), dev.end());
    return std::pair<double, std::size_t>(
        dev.empty() ? 1e9 : dev[dev.size() / 2], dev.size());
  };
  for (auto mode : {ExclusionMode::paper_literal, ExclusionMode::sin_zeros}) {
    const auto low = band_median(ladder_low(), 500, 1000, mode);
    const auto high = band_median(ladder_high(), 5000, 10000, mode);
    const char* tag =
        mode == ExclusionMode::paper_literal ? "paper_literal" : "sin_zeros";
    note(o, high.first < low.first,
         std::string(tag) + ": median |ratio-1| " + fmt(high.first) + " (n=" +
             std::to_string(high.second) + ", t~5e3..1e4) < " + fmt(low.first) +
             " (n=" + std::to_string(low.second) + ", t~5e2..1e3)");
  }
  return o;
}

// 8. Gram-interval count per Bessel cell: mean of N / ((1/2) ln t) over cells
//    near t = 1e4 within [0.8, 1.2], and closer to 1 than near t = 1e2.
//    The interval count per the containment definition gives
//    mean N = pi/s - 1 with s the Gram spacing, i.e. ratio ~ 1 - (2 + ln 2pi)/ln t:
//    0.59 at t = 1e4, so the band half of this criterion fails at desk scale
//    (it would first hold near t ~ 2e8); measured values are printed either way.
Outcome criterion_cell_counts() {
  Outcome o;
  auto mean_ratio = [](int n_center) {
    double sum = 0;
    for (int n = n_center - 4; n <= n_center + 5; ++n) {
      const auto zeros = j1_zeros(n + 1);
      const double mid = (zeros.mu(n) + zeros.mu(n + 1)) / 2;
      sum += count_admissible_in_cell(n, 0.05) / (0.5 * std::log(mid));
    }
    return sum / 10;
  };
  const double near_100 = mean_ratio(31);    // cells at t ~ 1e2
  const double near_1e4 = mean_ratio(3183);  // cells at t ~ 1e4
  note(o, near_1e4 >= 0.8 && near_1e4 <= 1.2,
       "mean N/((1/2)ln t) near 1e4 = " + fmt(near_1e4) + " (band [0.8, 1.2]; " +
           "finite-size value 1-(2+ln 2pi)/ln t = " +
           fmt(1 - (2 + std::log(2 * kPi)) / std::log(1e4)) + ")");
  note(o, std::fabs(near_1e4 - 1) < std::fabs(near_100 - 1),
       "closer to 1 than near t=1e2 (" + fmt(near_100) + ")");
  return o;
}

// 9. second-order window: midchain change of variables exact to 1e-7,
//    full lhs/rhs ratio at T=1e4, U=50 within [0.2, 5], doubling trend printed.
Outcome criterion_thm2() {
  Outcome o;
  Thm2Options opt;
  opt.rel_tol = 1e-8;
  const auto v1 = thm2_verify(ladder2_1e4(), 1e4, 50, opt);
  const double mid_rel =
      std::fabs(v1.midchain_lhs - v1.midchain_rhs) / std::fabs(v1.midchain_rhs);
  note(o, mid_rel <= 1e-7, "midchain relative = " + fmt(mid_rel));
  const double ratio1 = v1.full.ratio ? *v1.full.ratio : 0;
  note(o, ratio1 >= 0.2 && ratio1 <= 5.0,
       "lhs/rhs at T=1e4 = " + fmt(ratio1) + " (band [0.2, 5])");
  const auto v2 = thm2_verify(ladder2_2e4(), 2e4, 50, opt);
  const double ratio2 = v2.full.ratio ? *v2.full.ratio : 0;
  // documented, not asserted: the true regime is far beyond desk scale
  note(o, true,
       "doubling trend: ratio " + fmt(ratio1) + " at T=1e4 -> " + fmt(ratio2) +
           " at T=2e4 (|ratio-1|: " + fmt(std::fabs(ratio1 - 1)) + " -> " +
           fmt(std::fabs(ratio2 - 1)) + ")");
  return o;
}

// 10. golden fixtures reproduced to their stated tolerances.
Outcome criterion_fixtures() {
  Outcome o;
  const auto checks = oracle_check(resolve_fixture_dir(g_fixture_dir));
  for (const auto& c : checks) {
    note(o, c.ok(),
         c.name + " worst deviation/tolerance = " + fmt(c.worst_scaled));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (std::strcmp(argv[i], "--fixtures") == 0 && i + 1 < argc) g_fixture_dir = argv[++i];
    else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--fixtures DIR]\n");
      return 64;
    }
  }

  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"gram spacing law", criterion_gram_spacing},
      {"Bessel closed-form integral", criterion_bessel_identity},
      {"J1 zero spacing", criterion_zero_spacing},
      {"substitution identity", criterion_substitution},
      {"exact mid-chain identity", criterion_midchain},
      {"scaled chain remainders", criterion_chain_remainders},
      {"first-theorem ratio trend", criterion_thm1_trend},
      {"cell counts vs (1/2) ln t", criterion_cell_counts},
      {"second-order window", criterion_thm2},
      {"golden fixtures", criterion_fixtures},
  };

  int failures = 0;
  for (int i = 0; i < 10; ++i) {
    if (only != 0 && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %02d %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures;
}
