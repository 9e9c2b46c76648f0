#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fastseries::app {

struct SuiteResult {
  std::string name;
  bool passed = true;
  double max_error = 0.0;        // largest observed deviation, 0 for pure count suites
  std::int64_t count_delta = 0;  // summed |observed - predicted| transform counts
  std::string detail;            // first failure, if any
};

struct SelftestOptions {
  bool full = false;
  // Runs every suite with a broken FFT plan. All transform-based suites are
  // expected to fail.
  bool inject_twiddle_fault = false;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

// One line per suite, then a summary line.
std::string format_report(const std::vector<SuiteResult>& results);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace fastseries::app
