#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dcone {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitError = 1,
  kExitHypothesisFailed = 2,
  kExitConclusionFailed = 3,
};

/// Dispatches argv[1] (check-theorem, graze, partner, appendix-path,
/// conjecture1, isoptic, selftest). Reports go to `out` unless a report
/// path is configured; diagnostics are single lines on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions
{
  double congruence_tol = 1e-6;
  unsigned long long seed = 0;
};

/// Built-in analytic oracle suite. Returns {"checks": [...], "passed", "failed"}.
nlohmann::json selftest_report(const SelftestOptions& options);

}  // namespace dcone
