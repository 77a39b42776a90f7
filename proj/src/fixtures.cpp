#include "ladders/fixtures.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ladders/bessel.hpp"
#include "ladders/csv.hpp"
#include "ladders/gram.hpp"
#include "ladders/prime_pi.hpp"
#include "ladders/theta.hpp"
#include "ladders/zeta.hpp"

namespace ladders {

namespace {

std::vector<std::vector<std::string>> read_csv_rows(
    const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("missing fixture file: " + path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(f, line);  // header
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(csv_split(line));
  }
  if (rows.empty())
    throw std::runtime_error("empty fixture file: " + path.string());
  return rows;
}

}  // namespace

std::string resolve_fixture_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("ZETALADDER_FIXTURES")) return env;
  return "fixtures";
}

std::vector<FixtureCheckResult> oracle_check(const std::string& dir) {
  const std::filesystem::path root(dir);
  std::vector<FixtureCheckResult> checks;
  constexpr double kUlp = 2.220446049250313e-16;

  {
    FixtureCheckResult th{"theta_z.csv (theta)"};
    FixtureCheckResult zz{"theta_z.csv (z)"};
    for (const auto& row : read_csv_rows(root / "theta_z.csv")) {
      if (row.size() != 4) throw std::runtime_error("corrupt theta_z.csv row");
      const double t = std::stod(row[0]);
      const double theta_ref = std::stod(row[1]);
      const double z_ref = std::stod(row[2]);
      // 1e-10 absolute, relaxed to 4 ulp of theta where that is sub-ulp
      const double th_tol = std::max(1e-10, 4 * kUlp * std::fabs(theta_ref));
      th.worst_scaled = std::max(
          th.worst_scaled, std::fabs(theta(t).theta - theta_ref) / th_tol);
      ++th.rows;
      EvalAccuracy acc;
      acc.abs_tol = std::max(1e-9, 3 * method_floor(ZetaMethod::auto_select, t));
      const double z_tol =
          std::max(1e-9, 2 * method_floor(ZetaMethod::auto_select, t));
      zz.worst_scaled =
          std::max(zz.worst_scaled, std::fabs(hardy_z(t, acc) - z_ref) / z_tol);
      ++zz.rows;
    }
    checks.push_back(th);
    checks.push_back(zz);
  }
  {
    FixtureCheckResult c{"bessel_zeros.csv"};
    const BesselZeroTable table = j1_zeros(210);
    for (const auto& row : read_csv_rows(root / "bessel_zeros.csv")) {
      if (row.size() != 3)
        throw std::runtime_error("corrupt bessel_zeros.csv row");
      const int n = std::stoi(row[0]);
      c.worst_scaled = std::max(
          c.worst_scaled, std::fabs(table.mu(n) - std::stod(row[1])) / 1e-11);
      ++c.rows;
    }
    checks.push_back(c);
  }
  {
    FixtureCheckResult c{"gram_points.csv"};
    for (const auto& row : read_csv_rows(root / "gram_points.csv")) {
      if (row.size() != 3)
        throw std::runtime_error("corrupt gram_points.csv row");
      const long nu = std::stol(row[0]);
      const double t_ref = std::stod(row[1]);
      const double tol = std::max(1e-9, 1e-13 * t_ref);
      c.worst_scaled =
          std::max(c.worst_scaled, std::fabs(gram_point(nu).t - t_ref) / tol);
      ++c.rows;
    }
    checks.push_back(c);
  }
  {
    FixtureCheckResult c{"prime_pi.csv"};
    for (const auto& row : read_csv_rows(root / "prime_pi.csv")) {
      if (row.size() != 2) throw std::runtime_error("corrupt prime_pi.csv row");
      if (prime_pi(std::stod(row[0])) != std::stol(row[1])) c.worst_scaled = 1e9;
      ++c.rows;
    }
    checks.push_back(c);
  }
  return checks;
}

}  // namespace ladders
