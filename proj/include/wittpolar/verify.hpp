#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittpolar/serialize.hpp"

namespace wittpolar {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  std::optional<unsigned> p;  // restrict suites to this prime where applicable
};

// Suites in their canonical order.
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);
std::vector<CheckResult> run_all(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);
Json results_to_json(const std::vector<CheckResult>& results, const VerifyOptions& opts);
// Fixed-width table, one line per check.
std::string results_to_table(const std::vector<CheckResult>& results);

}  // namespace wittpolar
