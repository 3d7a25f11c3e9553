#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "li/cli/config.hpp"

namespace li::cli {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string measured;
  std::string tolerance;
  std::string detail;
};

/// Runs every enabled cross-check; checks that do not fit the configuration
/// (n_max too small, no zero table) are reported as skipped.
std::vector<CheckResult> run_verification(const RunConfig& config, std::ostream& err);

/// "PASS  name  measured=...  tolerance=...  detail"
std::string format_check(const CheckResult& check);

}  // namespace li::cli
