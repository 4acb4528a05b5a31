#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fibrant/runner.hpp"

namespace fibrant {

inline constexpr const char* kReportSchema = "fibrant-report/1";
inline constexpr const char* kToolVersion = "fibrant 1.0.0";

struct AssertionResult {
  std::string label;
  std::string citation;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct Report {
  std::string kind;    // "script" or "example"
  std::string source;  // file name or example name
  RunOptions options;
  std::vector<TaskResult> tasks;
  std::vector<AssertionResult> assertions;
  std::vector<std::string> warnings;
};

Report make_script_report(const Script& s, std::string source, const RunOptions& opts);

nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);
/// 0 when every task ran and every assertion passed, 2 on resource or parse
/// errors, 1 otherwise.
int exit_code(const Report& r);

}  // namespace fibrant
