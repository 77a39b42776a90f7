#include "ladders/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ladders/csv.hpp"
#include "ladders/prime_pi.hpp"
#include "ladders/quadrature.hpp"
#include "ladders/zeta.hpp"

namespace ladders {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

double phi_derivative(LadderOrder order, double t) {
  // Z accuracy tracks the method floor; the substitution identity is
  // self-consistent whatever the pointwise Z error, so best-effort is right.
  EvalAccuracy acc;
  acc.abs_tol = std::max(1e-9, 3 * method_floor(ZetaMethod::auto_select, t));
  const double log_t = std::log(t);
  if (order == LadderOrder::first) return zeta_abs_sq(t, acc) / log_t;
  const double z2 = zeta_abs_sq(t, acc);
  const double log2 = log_t * log_t;
  return 2 * kPi * kPi * z2 * z2 / (log2 * log2);
}

// Integral of f over one build step to absolute accuracy <= tol.
double integrate_step(const std::function<double(double)>& f, double a,
                      double b, double tol) {
  return integrate(f, a, b, 1e-13, {}, tol, 100000).value;
}

const char* derivative_tag(LadderOrder order) {
  return order == LadderOrder::first ? "zeta_sq_over_log"
                                     : "two_pi_sq_zeta_4th_over_log4";
}

}  // namespace

LadderTable build_ladder(LadderOrder order, double t_min, double t_max,
                         double tol) {
  if (!(t_min >= 10 && t_min < t_max && t_max <= 1e6))
    throw std::invalid_argument(
        "build_ladder: requires 10 <= t_min < t_max <= 1e6");
  if (!(tol > 0)) throw std::invalid_argument("build_ladder: tol must be > 0");

  LadderTable table;
  table.order_ = order;
  table.tol_ = tol;
  table.derivative_def_ = derivative_tag(order);

  auto deriv = [order](double t) { return phi_derivative(order, t); };

  table.t_.push_back(t_min);
  table.phi_.push_back(t_min - (1 - kEulerGamma) *
                                   static_cast<double>(prime_pi(t_min)));
  table.dphi_.push_back(deriv(t_min));

  double t = t_min;
  while (t < t_max) {
    double step = std::min(0.25, kPi / std::log(t));
    double t_next = t + step;
    if (t_next > t_max - 1e-9) t_next = t_max;
    // Z^2 carries ~ulp(theta)-scale jitter; integrate() stall detection
    // returns the roundoff floor honestly when tol is below it.
    const double step_tol = tol;
    const double increment = integrate_step(deriv, t, t_next, step_tol);
    if (!(increment > 0))
      throw std::runtime_error("build_ladder: non-monotone increment at t=" +
                               std::to_string(t));
    table.t_.push_back(t_next);
    table.phi_.push_back(table.phi_.back() + increment);
    table.dphi_.push_back(deriv(t_next));
    t = t_next;
  }

  // Fritsch-Carlson clamp: d_i <= 3 min(adjacent secants) keeps every Hermite
  // segment monotone (the raw phi' can exceed that near a zero of Z, where
  // the step increment is small but the endpoint derivative is not).
  const std::size_t n = table.t_.size();
  for (std::size_t i = 0; i < n; ++i) {
    double m = std::numeric_limits<double>::infinity();
    if (i > 0)
      m = std::min(m, (table.phi_[i] - table.phi_[i - 1]) /
                          (table.t_[i] - table.t_[i - 1]));
    if (i + 1 < n)
      m = std::min(m, (table.phi_[i + 1] - table.phi_[i]) /
                          (table.t_[i + 1] - table.t_[i]));
    table.dphi_[i] = std::min(table.dphi_[i], 3 * m);
  }

  table.validate();
  return table;
}

void LadderTable::validate() const {
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    if (!(phi_[i + 1] > phi_[i]))
      throw std::runtime_error("LadderTable: phi not strictly increasing");
    if (dphi_[i] < 0)
      throw std::runtime_error("LadderTable: negative derivative sample");
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (!(phi_[i] < t_[i]))
      throw std::runtime_error(
          "LadderTable: phi(t) >= t at t=" + std::to_string(t_[i]) +
          "; the lag anchor only supports ranges where the ladder stays "
          "behind t (short order-2 ranges, t_min not too small)");
  }
}

int LadderTable::segment_of_t(double t) const {
  if (t < t_.front() || t > t_.back())
    throw std::out_of_range("LadderTable: t=" + std::to_string(t) +
                            " outside covered range [" +
                            std::to_string(t_.front()) + ", " +
                            std::to_string(t_.back()) + "]");
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  int i = static_cast<int>(it - t_.begin()) - 1;
  return std::clamp(i, 0, static_cast<int>(t_.size()) - 2);
}

double LadderTable::value(double t) const {
  const int i = segment_of_t(t);
  const double h = t_[i + 1] - t_[i];
  const double s = (t - t_[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  return phi_[i] * (2 * s3 - 3 * s2 + 1) + h * dphi_[i] * (s3 - 2 * s2 + s) +
         phi_[i + 1] * (-2 * s3 + 3 * s2) + h * dphi_[i + 1] * (s3 - s2);
}

double LadderTable::derivative(double t) const {
  const int i = segment_of_t(t);
  const double h = t_[i + 1] - t_[i];
  const double s = (t - t_[i]) / h;
  const double s2 = s * s;
  return 6 * (s2 - s) * (phi_[i] - phi_[i + 1]) / h +
         dphi_[i] * (3 * s2 - 4 * s + 1) + dphi_[i + 1] * (3 * s2 - 2 * s);
}

double LadderTable::inverse(double x) const {
  if (x < phi_.front() || x > phi_.back())
    throw std::out_of_range("LadderTable: x=" + std::to_string(x) +
                            " outside phi range [" +
                            std::to_string(phi_.front()) + ", " +
                            std::to_string(phi_.back()) + "]");
  auto it = std::upper_bound(phi_.begin(), phi_.end(), x);
  int i = std::clamp(static_cast<int>(it - phi_.begin()) - 1, 0,
                     static_cast<int>(phi_.size()) - 2);

  double lo = t_[i], hi = t_[i + 1];
  const double span = phi_[i + 1] - phi_[i];
  double t = lo + (hi - lo) * std::clamp((x - phi_[i]) / span, 0.0, 1.0);
  // Drive the bracket itself below a few ulp of t: an |phi - x| acceptance
  // would stall where phi' is tiny (Z has a zero) and leave a large t error.
  for (int iter = 0; iter < 200 && hi - lo > 8e-16 * (std::fabs(lo) + 1); ++iter) {
    const double f = value(t) - x;
    if (f == 0) return t;
    (f < 0 ? lo : hi) = t;
    const double d = derivative(t);
    double next = d > 0 ? t - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  return 0.5 * (lo + hi);
}

double ladder_value(const LadderTable& table, double t) { return table.value(t); }
double ladder_inverse(const LadderTable& table, double x) { return table.inverse(x); }

double ladder_lag_ratio(const LadderTable& table, double t) {
  return (t - table.value(t)) /
         ((1 - kEulerGamma) * static_cast<double>(prime_pi(t)));
}

QuadratureResult integrate_on_table(const LadderTable& table,
                                    const std::function<double(double)>& f,
                                    double a, double b, double rel_tol) {
  if (!(a <= b)) throw std::invalid_argument("integrate_on_table: requires a <= b");
  QuadratureResult out;
  if (a == b) return out;
  const auto& knots = table.grid_t();

  // Scale pass: one GK15 panel per clipped segment.
  auto first = std::upper_bound(knots.begin(), knots.end(), a);
  std::vector<std::pair<double, double>> pieces;
  double lo = a;
  for (auto it = first; it != knots.end() && *it < b; ++it) {
    pieces.emplace_back(lo, *it);
    lo = *it;
  }
  pieces.emplace_back(lo, b);

  double rough = 0, rough_abs = 0;
  for (const auto& [sa, sb] : pieces) {
    const auto pe = detail::gk15_panel(f, sa, sb);
    out.evaluations += 15;
    rough += pe.value;
    rough_abs += pe.abs_integral;
  }
  const double total_target =
      std::max(rel_tol * std::max(std::fabs(rough), rough_abs / 50), 1e-300);

  for (const auto& [sa, sb] : pieces) {
    const auto r = integrate(f, sa, sb, rel_tol, {},
                             total_target * (sb - sa) / (b - a), 60000);
    out.value += r.value;
    out.error_estimate += r.error_estimate;
    out.panels += r.panels;
    out.evaluations += r.evaluations;
  }
  return out;
}

SubstitutionCheck substitution_check(const LadderTable& table,
                                     const std::function<double(double)>& f,
                                     double T, double U, double rel_tol) {
  const double log_T = std::log(T);
  if (!(U > 0 && U <= T / log_T))
    throw std::invalid_argument("substitution_check: requires 0 < U <= T/ln T");
  const double lo = table.inverse(T);
  const double hi = table.inverse(T + U);
  const double hint = 2 * kPi / std::log(std::max(T / (2 * kPi), 1.5));

  const auto lhs = integrate_on_table(
      table, [&](double t) { return f(table.value(t)) * table.derivative(t); },
      lo, hi, rel_tol);
  const auto rhs = integrate(f, T, T + U, rel_tol, hint);

  SubstitutionCheck out;
  out.lhs = lhs.value;
  out.rhs = rhs.value;
  // The lhs limits carry the inversion uncertainty (bracket width ~ ulp(t)),
  // which shifts the integral by ~|f| at each endpoint; fold it in so the
  // estimate covers everything the quadrature itself cannot see.
  const double endpoint_noise =
      (std::fabs(f(T)) + std::fabs(f(T + U))) * 2e-15 * std::max(1.0, T + U);
  out.lhs_error_estimate = lhs.error_estimate + endpoint_noise;
  out.rhs_error_estimate = rhs.error_estimate;
  return out;
}

void save_ladder(const LadderTable& table, std::ostream& out) {
  nlohmann::json header;
  header["order"] = table.order() == LadderOrder::first ? 1 : 2;
  header["anchor_t"] = table.anchor_t();
  header["anchor_phi"] = table.anchor_phi();
  header["tolerance"] = table.tolerance();
  header["derivative_def"] = table.derivative_def();
  out << "# " << header.dump() << "\n";
  out << "t,phi,phi_prime\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << csv_double(table.grid_t()[i]) << ',' << csv_double(table.grid_phi()[i])
        << ',' << csv_double(table.grid_dphi()[i]) << '\n';
  }
}

void save_ladder(const LadderTable& table, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_ladder: cannot open " + path);
  save_ladder(table, f);
}

LadderTable load_ladder(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.size() < 2 || line[0] != '#')
    throw std::runtime_error("load_ladder: missing JSON header line");
  const nlohmann::json header = nlohmann::json::parse(line.substr(1));

  LadderTable table;
  table.order_ =
      header.at("order").get<int>() == 1 ? LadderOrder::first : LadderOrder::second;
  table.tol_ = header.at("tolerance").get<double>();
  table.derivative_def_ = header.at("derivative_def").get<std::string>();

  if (!std::getline(in, line) || line != "t,phi,phi_prime")
    throw std::runtime_error("load_ladder: bad column header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = csv_split(line);
    if (cells.size() != 3)
      throw std::runtime_error("load_ladder: malformed row: " + line);
    table.t_.push_back(std::stod(cells[0]));
    table.phi_.push_back(std::stod(cells[1]));
    table.dphi_.push_back(std::stod(cells[2]));
  }
  if (table.t_.size() < 2) throw std::runtime_error("load_ladder: table too small");
  table.validate();
  return table;
}

LadderTable load_ladder(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_ladder: cannot open " + path);
  return load_ladder(f);
}

}  // namespace ladders
