#include "ladders/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ladders/csv.hpp"
#include "ladders/theta.hpp"
#include "ladders/zeta.hpp"

namespace ladders {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRatioGuard = 1e-12;

double gram_hint(double t) {
  return 2 * kPi / std::log(std::max(t / (2 * kPi), 1.5));
}

double zeta_sq_best_effort(double t) {
  EvalAccuracy acc;
  acc.abs_tol = std::max(1e-9, 3 * method_floor(ZetaMethod::auto_select, t));
  return zeta_abs_sq(t, acc);
}

}  // namespace

std::string to_string(RecordKind kind) {
  switch (kind) {
    case RecordKind::thm1: return "thm1";
    case RecordKind::thm1_exact_midchain: return "thm1_exact_midchain";
    case RecordKind::chain37: return "chain37";
    case RecordKind::chain38: return "chain38";
    case RecordKind::thm2: return "thm2";
  }
  return "?";
}

VerificationRecord make_record(RecordKind kind, double lhs, double rhs,
                               double quad_error) {
  VerificationRecord r;
  r.kind = kind;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = lhs - rhs;
  r.quad_error = quad_error;
  if (std::fabs(rhs) >= kRatioGuard) r.ratio = lhs / rhs;
  return r;
}

QuadratureResult thm1_lhs(const LadderTable& table, long nu, double rel_tol) {
  const double t0 = gram_point(nu).t;
  const double t1 = gram_point(nu + 1).t;
  const double lo = table.inverse(t0);
  const double hi = table.inverse(t1);
  return integrate_on_table(
      table,
      [&](double t) { return j1(table.value(t)) * zeta_sq_best_effort(t); },
      lo, hi, rel_tol);
}

double thm1_rhs_at(double t_nu) {
  return 2 * std::sqrt(2 * kPi) / std::sqrt(t_nu) * std::sin(t_nu - kPi / 4);
}

double thm1_rhs(long nu) { return thm1_rhs_at(gram_point(nu).t); }

std::pair<VerificationRecord, VerificationRecord> chain_check_37_38(long nu) {
  const double t0 = gram_point(nu).t;
  const double t1 = gram_point(nu + 1).t;
  const double cos_diff = std::cos(t0 - kPi / 4) - std::cos(t1 - kPi / 4);

  VerificationRecord a = make_record(
      RecordKind::chain37, j1_definite_integral(t0, t1),
      std::sqrt(2 / (kPi * t0)) * cos_diff, 0.0);
  a.nu = nu;

  VerificationRecord b = make_record(
      RecordKind::chain38, cos_diff,
      2 * kPi / std::log(t0) * std::sin(t0 - kPi / 4), 0.0);
  b.nu = nu;
  return {a, b};
}

Thm1Verification thm1_verify(const LadderTable& table, long nu,
                             const BesselZeroTable& zeros,
                             const Thm1Options& opt) {
  const auto cls = classify_interval(nu, opt.epsilon, zeros, opt.mode);
  if (!cls.admissible && !opt.force)
    throw InadmissibleIntervalError(
        "thm1_verify: interval nu=" + std::to_string(nu) +
        " is inadmissible (use force to evaluate anyway)");

  const double t0 = gram_point(nu).t;
  const double t1 = gram_point(nu + 1).t;
  const double lo = table.inverse(t0);
  const double hi = table.inverse(t1);

  Thm1Verification out;

  const auto full_quad = integrate_on_table(
      table,
      [&](double t) { return j1(table.value(t)) * zeta_sq_best_effort(t); },
      lo, hi, opt.rel_tol);
  out.full = make_record(RecordKind::thm1, full_quad.value, thm1_rhs_at(t0),
                         full_quad.error_estimate);
  out.full.nu = nu;
  out.full.epsilon = opt.epsilon;
  out.full.mode = opt.mode;
  out.full.admissible = cls.admissible;

  const auto exact_quad = integrate_on_table(
      table,
      [&](double t) { return j1(table.value(t)) * table.derivative(t); }, lo,
      hi, opt.rel_tol);
  out.exact_midchain =
      make_record(RecordKind::thm1_exact_midchain, exact_quad.value,
                  j1_definite_integral(t0, t1), exact_quad.error_estimate);
  out.exact_midchain.nu = nu;
  out.exact_midchain.epsilon = opt.epsilon;
  out.exact_midchain.mode = opt.mode;
  out.exact_midchain.admissible = cls.admissible;

  return out;
}

Thm2Verification thm2_verify(const LadderTable& second_order, double T,
                             double U, const Thm2Options& opt) {
  if (second_order.order() != LadderOrder::second)
    throw std::invalid_argument("thm2_verify: needs an order-2 ladder");
  if (!(U >= 0 && U <= T / std::log(T)))
    throw std::invalid_argument("thm2_verify: requires 0 <= U <= T/ln T");

  Thm2Verification out;
  const double log_T = std::log(T);
  const double log4 = log_T * log_T * log_T * log_T;
  const double rhs = U * log4 * log4 / (4 * kPi * kPi * kPi * kPi);
  if (U == 0) {
    out.full = make_record(RecordKind::thm2, 0.0, rhs, 0.0);
    out.full.T = T;
    out.full.U = U;
    return out;
  }

  const LadderTable* limit_table = &second_order;
  if (opt.limits == Thm2Limits::phi1_inverse) {
    if (!opt.first_order || opt.first_order->order() != LadderOrder::first)
      throw std::invalid_argument(
          "thm2_verify: phi1_inverse limits need a first-order ladder");
    limit_table = opt.first_order;
  }
  const double lo = limit_table->inverse(T);
  const double hi = limit_table->inverse(T + U);
  const double hint = gram_hint(T);

  auto zeta4_at_phi2 = [&](double t) {
    const double z2 = zeta_sq_best_effort(second_order.value(t));
    return z2 * z2;
  };

  const auto full_quad = integrate_on_table(
      *limit_table,
      [&](double t) {
        const double w = zeta_sq_best_effort(t);
        return zeta4_at_phi2(t) * w * w;
      },
      lo, hi, opt.rel_tol);
  out.full = make_record(RecordKind::thm2, full_quad.value, rhs,
                         full_quad.error_estimate);
  out.full.T = T;
  out.full.U = U;
  out.full.admissible = true;

  // Exact change of variables: weight phi2' instead of |zeta|^4.
  const auto mid_lhs = integrate_on_table(
      second_order,
      [&](double t) { return zeta4_at_phi2(t) * second_order.derivative(t); },
      second_order.inverse(T), second_order.inverse(T + U), opt.rel_tol);
  const auto mid_rhs = integrate(
      [&](double y) {
        const double z2 = zeta_sq_best_effort(y);
        return z2 * z2;
      },
      T, T + U, opt.rel_tol, hint);
  out.midchain_lhs = mid_lhs.value;
  out.midchain_rhs = mid_rhs.value;
  out.midchain_quad_error = mid_lhs.error_estimate + mid_rhs.error_estimate;
  return out;
}

namespace {

// Deterministic fan-out over an inclusive nu range: fixed chunking, results
// reassembled in nu order regardless of thread timing.
template <class PerNu>
void for_each_nu(long nu_from, long nu_to, int jobs, PerNu&& per_nu) {
  const long total = nu_to - nu_from + 1;
  if (total <= 0) return;
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 4) {
    for (long nu = nu_from; nu <= nu_to; ++nu) per_nu(nu);
    return;
  }
  const long chunk = (total + jobs - 1) / jobs;
  std::vector<std::future<void>> futures;
  for (int j = 0; j < jobs; ++j) {
    const long lo = nu_from + j * chunk;
    const long hi = std::min(nu_to, lo + chunk - 1);
    if (lo > nu_to) break;
    futures.push_back(std::async(std::launch::async, [lo, hi, &per_nu] {
      for (long nu = lo; nu <= hi; ++nu) per_nu(nu);
    }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace

std::vector<VerificationRecord> run_thm1_campaign(const LadderTable& table,
                                                  const CampaignSpec& spec) {
  if (spec.nu_to < spec.nu_from) return {};
  const long total = spec.nu_to - spec.nu_from + 1;

  // One shared zero table covering the top interval.
  const double t_top = gram_point(spec.nu_to + 1).t;
  const BesselZeroTable zeros =
      j1_zeros(static_cast<int>(std::ceil(t_top / kPi)) + 2);

  std::vector<Thm1Verification> rows(total);
  Thm1Options opt;
  opt.epsilon = spec.epsilon;
  opt.mode = spec.mode;
  opt.rel_tol = spec.rel_tol;
  opt.force = true;  // record admissibility instead of enforcing it

  for_each_nu(spec.nu_from, spec.nu_to, spec.jobs, [&](long nu) {
    try {
      rows[nu - spec.nu_from] = thm1_verify(table, nu, zeros, opt);
    } catch (const std::exception&) {
      // Per-record failure (coverage, budget) must not abort the batch:
      // the pair is emitted with NaN sides and no ratio.
      const double nan = std::numeric_limits<double>::quiet_NaN();
      Thm1Verification failed;
      failed.full = make_record(RecordKind::thm1, nan, nan, 0.0);
      failed.full.nu = nu;
      failed.full.epsilon = opt.epsilon;
      failed.full.mode = opt.mode;
      failed.exact_midchain =
          make_record(RecordKind::thm1_exact_midchain, nan, nan, 0.0);
      failed.exact_midchain.nu = nu;
      failed.exact_midchain.epsilon = opt.epsilon;
      failed.exact_midchain.mode = opt.mode;
      rows[nu - spec.nu_from] = failed;
    }
  });

  std::vector<VerificationRecord> records;
  records.reserve(2 * total);
  for (const auto& row : rows) {
    records.push_back(row.full);
    records.push_back(row.exact_midchain);
  }
  return records;
}

std::vector<VerificationRecord> run_chain_campaign(long nu_from, long nu_to,
                                                   int jobs) {
  if (nu_to < nu_from) return {};
  const long total = nu_to - nu_from + 1;
  std::vector<std::pair<VerificationRecord, VerificationRecord>> rows(total);
  for_each_nu(nu_from, nu_to, jobs,
              [&](long nu) { rows[nu - nu_from] = chain_check_37_38(nu); });
  std::vector<VerificationRecord> records;
  records.reserve(2 * total);
  for (const auto& row : rows) {
    records.push_back(row.first);
    records.push_back(row.second);
  }
  return records;
}

void write_records_csv(std::ostream& out,
                       const std::vector<VerificationRecord>& records) {
  out << "kind,nu,T,U,epsilon,mode,lhs,rhs,ratio,residual,quad_error,admissible\n";
  for (const auto& r : records) {
    out << to_string(r.kind) << ',' << r.nu << ',' << csv_double(r.T) << ','
        << csv_double(r.U) << ',' << csv_double(r.epsilon) << ','
        << (r.mode == ExclusionMode::paper_literal ? "paper_literal"
                                                   : "sin_zeros")
        << ',' << csv_double(r.lhs) << ',' << csv_double(r.rhs) << ','
        << (r.ratio ? csv_double(*r.ratio) : "nan") << ','
        << csv_double(r.residual) << ',' << csv_double(r.quad_error) << ','
        << (r.admissible ? 1 : 0) << '\n';
  }
}

std::string records_summary_json(const std::vector<VerificationRecord>& records) {
  // |ratio - 1| quartiles per decade of t (records indexed by nu use t_nu).
  std::map<int, std::vector<double>> by_decade;
  for (const auto& r : records) {
    if (!r.ratio) continue;
    const double t = r.nu >= 1 ? gram_point(r.nu).t : r.T;
    if (!(t > 0)) continue;
    by_decade[static_cast<int>(std::floor(std::log10(t)))].push_back(
        std::fabs(*r.ratio - 1));
  }
  nlohmann::json out = nlohmann::json::array();
  for (auto& [decade, values] : by_decade) {
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
      const double pos = q * (values.size() - 1);
      const std::size_t i = static_cast<std::size_t>(pos);
      const double frac = pos - i;
      return i + 1 < values.size() ? values[i] * (1 - frac) + values[i + 1] * frac
                                   : values[i];
    };
    nlohmann::json row;
    row["decade_pow10"] = decade;
    row["count"] = values.size();
    row["q1_abs_ratio_minus_1"] = quantile(0.25);
    row["median_abs_ratio_minus_1"] = quantile(0.5);
    row["q3_abs_ratio_minus_1"] = quantile(0.75);
    out.push_back(row);
  }
  return out.dump(2);
}

}  // namespace ladders
