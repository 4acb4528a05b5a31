#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibrant/ideal.hpp"
#include "fibrant/scalar.hpp"
#include "fibrant/script.hpp"
#include "fibrant/semigroup.hpp"

namespace fibrant {

struct RunOptions {
  std::uint32_t nmax = 12;
  std::uint32_t red_bound = 10;
  std::uint64_t seed = 1;
  std::uint32_t trials = 8;
  std::uint32_t window_lo = 1;
  std::uint32_t window_hi = 6;
  /// Replaces the field of the script's ring when set.
  std::optional<Field> field;
  bool timing = false;
};

/// Objects bound by a script's declarations.
struct Environment {
  RingPtr ring;
  SemigroupPtr semigroup;
  std::map<std::string, IdealHandle> ideals;
  std::map<std::string, SemigroupIdeal> sg_ideals;
  std::map<std::string, Polynomial> elems;
  std::map<std::string, long> sg_elems;

  const IdealHandle& ideal(const std::string& name) const;
  const SemigroupIdeal& sg_ideal(const std::string& name) const;
  const Polynomial& elem(const std::string& name) const;
};

struct TaskResult {
  std::string command;  // pretty-printed task line
  nlohmann::ordered_json result;
  std::vector<std::string> text;
  std::optional<std::string> error_code;
  std::string error;
  double seconds = 0;

  bool ok() const { return !error_code; }
};

struct ScriptRun {
  Environment env;
  std::vector<TaskResult> tasks;
};

Environment build_environment(const Script& s, const RunOptions& opts);
/// Runs every task in order. Task failures are recorded, not thrown;
/// resource errors abort the remaining tasks.
ScriptRun run_script(const Script& s, const RunOptions& opts);

}  // namespace fibrant
