// Command-line front end: Gram points, Bessel zeros, ladder construction,
// verification campaigns, and the golden-fixture gate.
//
// Exit codes: 0 success, 1 usage error, 2 numerical or file failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "ladders/bessel.hpp"
#include "ladders/csv.hpp"
#include "ladders/fixtures.hpp"
#include "ladders/gram.hpp"
#include "ladders/ladder.hpp"
#include "ladders/theta.hpp"
#include "ladders/verify.hpp"
#include "ladders/zeta.hpp"

namespace {

using namespace ladders;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

ExclusionMode parse_mode(const std::string& mode) {
  if (mode == "paper_literal") return ExclusionMode::paper_literal;
  if (mode == "sin_zeros") return ExclusionMode::sin_zeros;
  throw CLI::ValidationError("--mode must be paper_literal or sin_zeros");
}

// ------------------------------------------------------------ subcommands

int cmd_gram_list(long from, long to, double epsilon, const std::string& mode_s,
                  const std::string& out_path) {
  const ExclusionMode mode = parse_mode(mode_s);
  const double t_top = gram_point(to + 1).t;
  const BesselZeroTable zeros =
      j1_zeros(static_cast<int>(std::ceil(t_top / 3.14)) + 2);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "nu,t,spacing,residual,admissible,cell_index,sin_magnitude\n";
  double t_prev = gram_point(from).t;
  for (long nu = from; nu <= to; ++nu) {
    const double t_next = gram_point(nu + 1).t;
    const auto cls = classify_interval(nu, epsilon, zeros, mode);
    out << nu << ',' << csv_double(t_prev) << ',' << csv_double(t_next - t_prev)
        << ',' << csv_double(spacing_residual(nu)) << ','
        << (cls.admissible ? 1 : 0) << ','
        << (cls.containing_bessel_index ? *cls.containing_bessel_index : -1)
        << ',' << csv_double(cls.sin_magnitude) << '\n';
    t_prev = t_next;
  }
  return 0;
}

int cmd_bessel_zeros(int count, const std::string& out_path) {
  const BesselZeroTable table = j1_zeros(count);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "n,mu,j1_residual\n";
  for (int n = 1; n <= table.count(); ++n) {
    out << n << ',' << csv_double(table.mu(n)) << ','
        << csv_double(ladders::j1(table.mu(n))) << '\n';
  }
  return 0;
}

int cmd_ladder_build(int order, double t_min, double t_max, double tol,
                     const std::string& out_path) {
  const LadderTable table = build_ladder(
      order == 1 ? LadderOrder::first : LadderOrder::second, t_min, t_max, tol);
  if (out_path.empty()) {
    save_ladder(table, std::cout);
  } else {
    save_ladder(table, out_path);
    std::cerr << "ladder: " << table.size() << " nodes, phi range ["
              << table.phi_min() << ", " << table.phi_max() << "]\n";
  }
  return 0;
}

void require_thm1_coverage(const LadderTable& table, long nu_from, long nu_to) {
  const double t_lo = gram_point(nu_from).t;
  const double t_hi = gram_point(nu_to + 1).t;
  if (t_lo < table.phi_min() || t_hi > table.phi_max()) {
    std::ostringstream msg;
    msg << "ladder does not cover the requested Gram range: need phi range ["
        << t_lo << ", " << t_hi << "], ladder covers [" << table.phi_min()
        << ", " << table.phi_max() << "] over t in [" << table.t_min() << ", "
        << table.t_max() << "]";
    throw std::runtime_error(msg.str());
  }
}

int cmd_verify_thm1(const std::string& ladder_path, long nu_from, long nu_to,
                    double epsilon, const std::string& mode_s, double rel_tol,
                    int jobs, const std::string& out_path,
                    const std::string& summary_path) {
  const LadderTable table = load_ladder(ladder_path);
  require_thm1_coverage(table, nu_from, nu_to);

  CampaignSpec spec;
  spec.nu_from = nu_from;
  spec.nu_to = nu_to;
  spec.epsilon = epsilon;
  spec.mode = parse_mode(mode_s);
  spec.rel_tol = rel_tol;
  spec.jobs = jobs;
  const auto records = run_thm1_campaign(table, spec);

  std::ofstream file;
  write_records_csv(open_out(file, out_path), records);
  const std::string summary = records_summary_json(records);
  if (summary_path.empty()) {
    if (!out_path.empty()) std::cout << summary << '\n';
  } else {
    std::ofstream sf(summary_path);
    if (!sf) throw std::runtime_error("cannot open summary file: " + summary_path);
    sf << summary << '\n';
  }
  return 0;
}

int cmd_verify_thm2(const std::string& ladder_path,
                    const std::string& ladder1_path, double T, double U,
                    const std::string& limits, double rel_tol,
                    const std::string& out_path) {
  if (limits != "phi2" && limits != "phi1")
    throw CLI::ValidationError("--limits must be phi2 or phi1");
  const LadderTable table = load_ladder(ladder_path);
  Thm2Options opt;
  opt.rel_tol = rel_tol;
  std::optional<LadderTable> first_order;
  if (limits == "phi1") {
    if (ladder1_path.empty())
      throw std::runtime_error("--limits phi1 requires --ladder1");
    first_order = load_ladder(ladder1_path);
    opt.limits = Thm2Limits::phi1_inverse;
    opt.first_order = &*first_order;
  }
  const auto v = thm2_verify(table, T, U, opt);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_records_csv(out, {v.full});
  out << "# midchain_lhs=" << csv_double(v.midchain_lhs)
      << " midchain_rhs=" << csv_double(v.midchain_rhs)
      << " midchain_quad_error=" << csv_double(v.midchain_quad_error) << '\n';
  return 0;
}

int cmd_verify_chain(long nu_from, long nu_to, int jobs,
                     const std::string& out_path) {
  const auto records = run_chain_campaign(nu_from, nu_to, jobs);
  std::ofstream file;
  write_records_csv(open_out(file, out_path), records);
  return 0;
}

// ------------------------------------------------------------ oracle-check

int cmd_oracle_check(const std::string& dir) {
  const auto checks = oracle_check(resolve_fixture_dir(dir));
  bool all_ok = true;
  for (const auto& c : checks) {
    std::cout << (c.ok() ? "OK   " : "FAIL ") << c.name << ": rows=" << c.rows
              << " worst_deviation_over_tolerance=" << c.worst_scaled << '\n';
    all_ok = all_ok && c.ok();
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "zetaladder: ladder tables built from |zeta(1/2+it)|^2 power data,\n"
      "Gram points, Bessel J1 zeros, and verification of the associated\n"
      "integral identities (exact where exact, asymptotic where asymptotic)."};
  app.require_subcommand(1);

  auto* gram = app.add_subcommand("gram", "Gram sequence theta(t_nu) = pi nu");
  gram->require_subcommand(1);
  auto* gram_list = gram->add_subcommand(
      "list",
      "List Gram points with spacing against the two-term law\n"
      "2pi/ln t + 2pi ln(2pi)/ln^2 t and interval admissibility\n"
      "(containment in a J1-zero cell, clearance of the exclusion lattice).");
  long g_from = 1, g_to = 10;
  double g_eps = 0.05;
  std::string g_mode = "paper_literal", g_out;
  gram_list->add_option("--from", g_from, "first nu (>= 1)")->required();
  gram_list->add_option("--to", g_to, "last nu (inclusive)")->required();
  gram_list->add_option("--epsilon", g_eps, "exclusion-zone half width");
  gram_list->add_option("--mode", g_mode, "paper_literal | sin_zeros");
  gram_list->add_option("--out", g_out, "output CSV (default stdout)");

  auto* bessel = app.add_subcommand("bessel", "Bessel J1 zero table");
  bessel->require_subcommand(1);
  auto* bessel_zeros_cmd = bessel->add_subcommand(
      "zeros",
      "First N positive zeros mu_n of J1, each refined to 1e-12;\n"
      "spacing mu_{n+1} - mu_n tends to pi.");
  int b_count = 10;
  std::string b_out;
  bessel_zeros_cmd->add_option("--count", b_count, "number of zeros")->required();
  bessel_zeros_cmd->add_option("--out", b_out, "output CSV (default stdout)");

  auto* ladder = app.add_subcommand("ladder", "build ladder tables");
  ladder->require_subcommand(1);
  auto* ladder_build_cmd = ladder->add_subcommand(
      "build",
      "Cumulative integral of phi' = Z^2/ln t (order 1) or\n"
      "2 pi^2 Z^4/ln^4 t (order 2), anchored by t - phi(t) = (1-c) pi(t)\n"
      "with c Euler's constant.");
  int l_order = 1;
  double l_tmin = 0, l_tmax = 0, l_tol = 1e-10;
  std::string l_out;
  ladder_build_cmd->add_option("--order", l_order, "1 | 2")
      ->check(CLI::IsMember({1, 2}))
      ->required();
  ladder_build_cmd->add_option("--t-min", l_tmin, "lower abscissa (>= 10)")->required();
  ladder_build_cmd->add_option("--t-max", l_tmax, "upper abscissa (<= 1e6)")->required();
  ladder_build_cmd->add_option("--tol", l_tol, "per-step integration error");
  ladder_build_cmd->add_option("--out", l_out, "output table (default stdout)");

  auto* verify = app.add_subcommand("verify", "verification campaigns");
  verify->require_subcommand(1);

  auto* thm1 = verify->add_subcommand(
      "thm1",
      "Per Gram interval: integral of J1(phi1(t)) |zeta(1/2+it)|^2 between\n"
      "inverse-ladder images vs 2 sqrt(2pi)/sqrt(t_nu) sin(t_nu - pi/4)\n"
      "(asymptotic), plus the exact-weight variant vs J0(t_nu) - J0(t_nu+1).");
  std::string t1_ladder, t1_mode = "paper_literal", t1_out, t1_summary;
  long t1_from = 0, t1_to = 0;
  double t1_eps = 0.05, t1_rel = 1e-9;
  int t1_jobs = std::max(1u, std::thread::hardware_concurrency());
  thm1->add_option("--nu-from", t1_from)->required();
  thm1->add_option("--nu-to", t1_to)->required();
  thm1->add_option("--epsilon", t1_eps, "exclusion-zone half width");
  thm1->add_option("--mode", t1_mode, "paper_literal | sin_zeros");
  thm1->add_option("--ladder", t1_ladder, "order-1 ladder file")->required();
  thm1->add_option("--rel-tol", t1_rel, "quadrature relative tolerance");
  thm1->add_option("--jobs", t1_jobs, "parallel fan-out degree");
  thm1->add_option("--out", t1_out, "records CSV (default stdout)");
  thm1->add_option("--summary", t1_summary, "JSON summary file");

  auto* thm2 = verify->add_subcommand(
      "thm2",
      "Over [T, T+U]: integral of |zeta(1/2+i phi2)|^4 |zeta(1/2+it)|^4\n"
      "between inverse-ladder images vs U ln^8 T/(4 pi^4), plus the exact\n"
      "change-of-variables midchain pair with weight phi2'.");
  std::string t2_ladder, t2_ladder1, t2_limits = "phi2", t2_out;
  double t2_T = 0, t2_U = 0, t2_rel = 1e-7;
  thm2->add_option("--T", t2_T)->required();
  thm2->add_option("--U", t2_U)->required();
  thm2->add_option("--ladder", t2_ladder, "order-2 ladder file")->required();
  thm2->add_option("--ladder1", t2_ladder1, "order-1 ladder (for --limits phi1)");
  thm2->add_option("--limits", t2_limits, "phi2 | phi1 inverse limits");
  thm2->add_option("--rel-tol", t2_rel, "quadrature relative tolerance");
  thm2->add_option("--out", t2_out, "records CSV (default stdout)");

  auto* chain = verify->add_subcommand(
      "chain",
      "Closed-form chain around each Gram pair: J0 difference vs its\n"
      "sqrt(2/pi t) cosine form, and the cosine difference vs\n"
      "(2pi/ln t_nu) sin(t_nu - pi/4); residuals carry the asymptotic rates.");
  long ch_from = 0, ch_to = 0;
  int ch_jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string ch_out;
  chain->add_option("--nu-from", ch_from)->required();
  chain->add_option("--nu-to", ch_to)->required();
  chain->add_option("--jobs", ch_jobs, "parallel fan-out degree");
  chain->add_option("--out", ch_out, "records CSV (default stdout)");

  auto* ocheck = app.add_subcommand(
      "oracle-check",
      "Recompute every golden fixture (theta, Z, Gram points, J1 zeros,\n"
      "pi(t)) against the shipped CSVs and report the worst deviation.");
  std::string oc_dir;
  ocheck->add_option(
      "--fixtures", oc_dir,
      "fixture directory (default: $ZETALADDER_FIXTURES or ./fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gram_list->parsed()) return cmd_gram_list(g_from, g_to, g_eps, g_mode, g_out);
    if (bessel_zeros_cmd->parsed()) return cmd_bessel_zeros(b_count, b_out);
    if (ladder_build_cmd->parsed())
      return cmd_ladder_build(l_order, l_tmin, l_tmax, l_tol, l_out);
    if (thm1->parsed())
      return cmd_verify_thm1(t1_ladder, t1_from, t1_to, t1_eps, t1_mode, t1_rel,
                             t1_jobs, t1_out, t1_summary);
    if (thm2->parsed())
      return cmd_verify_thm2(t2_ladder, t2_ladder1, t2_T, t2_U, t2_limits,
                             t2_rel, t2_out);
    if (chain->parsed()) return cmd_verify_chain(ch_from, ch_to, ch_jobs, ch_out);
    if (ocheck->parsed()) return cmd_oracle_check(oc_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
