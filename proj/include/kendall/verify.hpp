// Acceptance verification suites.
//
// Each criterion is a self-contained check with its tolerances pinned in
// code.  The CLI `verify` subcommand and the acceptance test binary both run
// these; a criterion either passes or reports the worst offending value.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kendall {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;     ///< worst value vs tolerance, machine parsable
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Restrict suites that iterate over the catalog to one law.
  std::optional<std::string> dist;
  std::optional<double> alpha;
  std::optional<double> beta;
  int n_threads = 0;
};

/// Run one named suite.  Known names: closedform, series, williamson,
/// simulator, pair, moments, fredholm, elementary, blackwell, limitlaw,
/// snscaling, pgf, all.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

/// All acceptance criteria in order (same as run_suite("all")).
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

}  // namespace kendall
