#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace posdyn {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = {});
};

struct VerifyOptions {
  unsigned jobs = 1;
};

struct Suite {
  std::string name;
  std::string summary;
  std::function<void(const VerifyOptions&, SuiteResult&)> body;
};

const std::vector<Suite>& verification_suites();

/// Runs one suite by name; exceptions become failed checks. Throws
/// InvalidArgument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

std::string suite_result_to_text(const SuiteResult& r);

}  // namespace posdyn
