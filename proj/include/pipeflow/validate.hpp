#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pipeflow/config.hpp"

namespace pipeflow {

/// One pass/fail line of the validation report.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Deliberate degradations, used to demonstrate that the validation checks
/// actually catch the failure modes they target.
struct FaultInjection {
  bool gas_roe_sign = false;  // corrupt the gas Roe matrix to -u^2 - 1/C_G
  int quad_order = 0;         // override liquid Roe quadrature order
  int quad_panels = 0;        // override liquid Roe quadrature panel count
};

/// Roe-property, conservation, and construction regression suites.
ValidationReport run_validation(const FaultInjection& fault = {});

void print_report(const ValidationReport& report, std::ostream& os);

/// Time-step conventions reported for the error tables.
enum class DtRule {
  FixedRatio4,  // dt = dx / 4
  Cfl045,       // dt = 0.45 dx / max wave speed
};

const char* to_string(DtRule rule);

/// One scheme's errors at one grid size; a run that aborted (e.g. blow-up
/// under the CFL-violating dt reading) is recorded, not propagated.
struct ErrorCell {
  ErrorReport err;
  bool failed = false;
  std::string what;
};

struct ErrorTableRow {
  int n = 0;
  ErrorCell roe;
  ErrorCell nt;
};

struct ErrorTable {
  DtRule rule = DtRule::FixedRatio4;
  std::vector<ErrorTableRow> rows;
};

/// Errors at T for both schemes over the grid sizes, under one dt rule.
/// The base config must carry an exact-solution construction.
ErrorTable compute_error_table(const ExperimentConfig& base, DtRule rule,
                               const std::vector<int>& ns = {16, 32, 64, 128,
                                                             256});

/// Paper-style layout, two decimals, plus a full-precision CSV.
void write_error_table(const ErrorTable& table, std::ostream& os);
void write_error_table_csv(const ErrorTable& table, std::ostream& os);

}  // namespace pipeflow
