#pragma once

// Registry of executable invariant checks. Each suite runs its checks over a
// ball of the given radius (or an exponent box of that size) and reports one
// result per named check.

#include <functional>
#include <string>
#include <vector>

namespace tonnetz {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample, or a short summary
};

struct VerificationSuite {
  std::string name;
  std::string description;
  std::function<std::vector<CheckResult>(int radius)> run;
};

// Suites in a fixed order (sorted by name).
const std::vector<VerificationSuite>& verification_suites();

// Runs one suite by name, or every suite for "all". Throws
// std::invalid_argument for an unknown name.
std::vector<CheckResult> run_verification(const std::string& suite, int radius);

}  // namespace tonnetz
