#pragma once

#include <string>
#include <vector>

namespace ladders {

/// One golden-fixture comparison: worst per-row deviation divided by that
/// row's tolerance; the check passes at <= 1.
struct FixtureCheckResult {
  std::string name;
  long rows = 0;
  double worst_scaled = 0;
  bool ok() const { return worst_scaled <= 1.0; }
};

/// Recompute every fixture (theta, Z, J1 zeros, Gram points, pi) against the
/// CSVs in `dir`.  Throws std::runtime_error on missing or corrupt files.
std::vector<FixtureCheckResult> oracle_check(const std::string& dir);

/// Fixture directory resolution: explicit argument, else $ZETALADDER_FIXTURES,
/// else "fixtures".
std::string resolve_fixture_dir(const std::string& explicit_dir);

}  // namespace ladders
