#pragma once

#include <functional>
#include <string>
#include <vector>

namespace frobpush {

enum class CheckOutcome { Pass, Warn, Fail };

std::string to_string(CheckOutcome o);

struct CheckResult {
  std::string suite;
  std::string key;
  CheckOutcome outcome = CheckOutcome::Pass;
  std::string detail;
};

struct VerifyOptions {
  int max_d = 4;
  int max_e = 3;
  std::vector<int> primes{2, 3, 5};
  int jobs = 1;
};

/// "identities", "oracles", "fixtures", "tensions".
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".  Results are sorted by suite and
/// key whatever the number of jobs.  Throws InvalidParameter on an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

struct VerifyCase {
  std::string key;
  std::function<CheckResult()> run;
};

/// Evaluates the cases on up to `jobs` threads.  A case that throws becomes a FAIL.
std::vector<CheckResult> run_cases(const std::string& suite, std::vector<VerifyCase> cases, int jobs);

}  // namespace frobpush
