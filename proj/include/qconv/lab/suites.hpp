#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qconv::lab {

struct CheckResult {
  std::string name;
  bool pass = true;
  nlohmann::ordered_json detail;  ///< witnesses on failure, values on success
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Verification suites, one per group of library invariants; "all" runs every suite.
std::vector<std::string> suite_names();
/// Throws InvalidArgumentError naming the available suites for an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace qconv::lab
