#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ergo/matrix.hpp"
#include "ergo/sweep.hpp"

namespace ergo {

// One verification check with its worst observed residual. A check passes
// when residual <= tolerance.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

// Eigensolver and Kronecker-product invariants. cfg.tolerance is the
// residual budget for the reconstruction-style checks.
std::vector<CheckResult> matrix_core_checks(const RunConfig& cfg);

// Channel invariants: CPTP completeness across the parameter grid,
// unitality classification, trace and Hermiticity preservation.
std::vector<CheckResult> channel_suite_checks(const RunConfig& cfg);

// Numeric pipeline against the closed-form oracles, transmitted-state
// coefficients, and the mu-independence of the reduced system state.
std::vector<CheckResult> oracle_equivalence_checks(const RunConfig& cfg);

// Measurement and work-extraction structure: no-signaling, ergotropy
// bounds, brute-force passive-energy agreement, phi and relabeling
// invariance.
std::vector<CheckResult> structural_checks(const RunConfig& cfg);

// Every suite above, in order.
std::vector<CheckResult> run_verification(const RunConfig& cfg);

// Completeness residual of an arbitrary operator list, reported as a
// check. Lets callers probe deliberately broken channels.
CheckResult check_kraus_completeness(const std::vector<Matrix>& operators, double tol,
                                     const std::string& detail);

// One line per check; returns true iff all passed.
bool write_verification_report(std::ostream& os, const std::vector<CheckResult>& checks);

}  // namespace ergo
