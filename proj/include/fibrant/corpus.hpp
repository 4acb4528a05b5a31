#pragma once

#include <string>
#include <vector>

#include "fibrant/report.hpp"

namespace fibrant {

struct ExampleInfo {
  std::string name;
  std::string title;
  bool long_running = false;
};

const std::vector<ExampleInfo>& list_examples();
/// The canned script of an example; kStructural for unknown names.
const std::string& example_script(const std::string& name);
/// Runs the script and compares every checked quantity with its expected
/// value. LONG examples need allow_long; kHypothesis otherwise.
Report run_example(const std::string& name, const RunOptions& opts, bool allow_long);

}  // namespace fibrant
