#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ladders/gram.hpp"
#include "ladders/ladder.hpp"
#include "ladders/quadrature.hpp"

namespace ladders {

enum class RecordKind { thm1, thm1_exact_midchain, chain37, chain38, thm2 };

std::string to_string(RecordKind kind);

/// One experiment row.  `ratio` is suppressed whenever |rhs| < 1e-12.
struct VerificationRecord {
  RecordKind kind;
  long nu = -1;                    // -1 when the record is (T, U)-indexed
  double T = 0, U = 0;
  double epsilon = 0;
  ExclusionMode mode = ExclusionMode::paper_literal;
  double lhs = 0;
  double rhs = 0;
  std::optional<double> ratio;
  double residual = 0;             // lhs - rhs
  double quad_error = 0;
  bool admissible = false;
};

VerificationRecord make_record(RecordKind kind, double lhs, double rhs,
                               double quad_error);

/// Quadrature of J1(phi(t)) |zeta(1/2+it)|^2 between the inverse-ladder
/// images of the Gram pair (t_nu, t_{nu+1}).  Admissibility is the caller's
/// concern here; thm1_verify enforces it.
QuadratureResult thm1_lhs(const LadderTable& table, long nu,
                          double rel_tol = 1e-9);

/// Closed form 2 sqrt(2 pi) / sqrt(t_nu) * sin(t_nu - pi/4).
double thm1_rhs(long nu);
double thm1_rhs_at(double t_nu);

/// The asymptotic chain around the Gram pair, closed-form both sides:
///   record A: J0(t_nu) - J0(t_{nu+1})   vs  its leading large-t approximation
///   record B: cos(t_nu-pi/4) - cos(t_{nu+1}-pi/4)  vs  (2pi/ln t_nu) sin(t_nu-pi/4)
std::pair<VerificationRecord, VerificationRecord> chain_check_37_38(long nu);

struct InadmissibleIntervalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Thm1Options {
  double epsilon = 0.05;
  ExclusionMode mode = ExclusionMode::paper_literal;
  double rel_tol = 1e-9;
  bool force = false;  // evaluate even when the interval is inadmissible
};

/// Both records of the first-theorem experiment for one Gram interval:
/// `full` integrates against |zeta|^2 and compares with thm1_rhs;
/// `exact_midchain` integrates against phi' and compares with
/// J0(t_nu) - J0(t_{nu+1}), an identity that must hold at quadrature accuracy.
struct Thm1Verification {
  VerificationRecord full;
  VerificationRecord exact_midchain;
};

Thm1Verification thm1_verify(const LadderTable& table, long nu,
                             const BesselZeroTable& zeros,
                             const Thm1Options& opt = {});

enum class Thm2Limits { phi2_inverse, phi1_inverse };

struct Thm2Options {
  double rel_tol = 1e-7;
  Thm2Limits limits = Thm2Limits::phi2_inverse;
  const LadderTable* first_order = nullptr;  // required for phi1_inverse limits
};

/// Second-theorem experiment over [T, T+U]:
///   full:      int |zeta(1/2 + i phi2(t))|^4 |zeta(1/2+it)|^4 dt  vs  U ln^8 T / (4 pi^4)
///   midchain:  int |zeta(1/2 + i phi2(t))|^4 phi2'(t) dt          vs  int_T^{T+U} |zeta|^4
/// The midchain pair is an exact change of variables.
struct Thm2Verification {
  VerificationRecord full;
  double midchain_lhs = 0;
  double midchain_rhs = 0;
  double midchain_quad_error = 0;
};

Thm2Verification thm2_verify(const LadderTable& second_order, double T,
                             double U, const Thm2Options& opt = {});

/// Campaign fan-out.  Deterministic: records ordered by nu regardless of the
/// parallelism degree.
struct CampaignSpec {
  long nu_from = 0;
  long nu_to = 0;  // inclusive
  double epsilon = 0.05;
  ExclusionMode mode = ExclusionMode::paper_literal;
  double rel_tol = 1e-9;
  int jobs = 1;
};

/// thm1 records (full + exact_midchain per interval, all intervals evaluated,
/// admissibility recorded rather than enforced).
std::vector<VerificationRecord> run_thm1_campaign(const LadderTable& table,
                                                  const CampaignSpec& spec);

/// chain37/chain38 record pairs over a nu range.
std::vector<VerificationRecord> run_chain_campaign(long nu_from, long nu_to,
                                                   int jobs = 1);

void write_records_csv(std::ostream& out,
                       const std::vector<VerificationRecord>& records);

/// Median / quartiles of |ratio - 1| per decade of t, JSON text.
std::string records_summary_json(const std::vector<VerificationRecord>& records);

}  // namespace ladders
