#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vsgc {

struct SelftestOptions {
  std::string suite;         // empty = all; else state|dynamics|steadystate|dressed|sweep
  bool perturb_rhs = false;  // negative control: flip one interference sign
};

struct CheckResult {
  std::string name;  // "suite/check"
  bool passed = false;
  double residual = 0.0;
  std::string note;
};

// Runs the oracle/invariant checks per module and reports residuals.
std::vector<CheckResult> run_selftest(const SelftestOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace vsgc
