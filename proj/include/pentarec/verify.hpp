// Named invariant suites. Each check is deterministic (fixed seeds) and
// reports its own wall time.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pentarec {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Suite names in run order; "all" runs every one of them.
std::vector<std::string> verify_suite_names();

/// Runs one suite (or "all"). Unknown names raise DomainError. The callback,
/// when set, sees each result as soon as it is available.
std::vector<CheckResult> run_verify(const std::string& suite,
                                    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace pentarec
