#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace levyflow {

struct CheckResult {
  enum class Status { Pass, Warn, Fail };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct VerifyOptions {
  int num_wiener = 1;
  int num_drivers = 2;
  int max_grade = 3;
  int tree_degree = 4;
  std::uint64_t seed = 1;
  // Test hook: named check whose computed data is deliberately corrupted,
  // to exercise the failure path end to end.
  std::string corrupt;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
nlohmann::json verification_report(const std::vector<CheckResult>& results);
std::string verification_text(const std::vector<CheckResult>& results);

}  // namespace levyflow
