#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwex::cli {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // worst measured deviation or failure description
  double seconds;
};

struct ValidateOptions {
  bool small_grid = false;
  // Harness sensitivity check: perturbs the Gaussian reference work by 1e-3
  // relative inside the oracle comparison, which MUST make validation fail.
  bool self_check_mutate = false;
};

std::vector<CheckResult> run_validation(const ValidateOptions& opt);

// Prints one human-readable line per check plus a JSON summary; returns 0
// iff every check passed, 2 otherwise.
int run_validate(const ValidateOptions& opt, std::ostream& os);

}  // namespace gwex::cli
