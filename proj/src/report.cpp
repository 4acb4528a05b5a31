#include "fibrant/report.hpp"

#include <algorithm>
#include <cstdio>

#include "fibrant/errors.hpp"

namespace fibrant {

using json = nlohmann::ordered_json;

namespace {

std::string field_name(const RunOptions& o) {
  if (!o.field) return "declared";
  return o.field->is_rational() ? "qq" : "fp:" + std::to_string(o.field->modulus());
}

}  // namespace

Report make_script_report(const Script& s, std::string source, const RunOptions& opts) {
  Report r;
  r.kind = "script";
  r.source = std::move(source);
  r.options = opts;
  ScriptRun run = run_script(s, opts);
  r.tasks = std::move(run.tasks);
  if (run.env.ring && !run.env.ring->field().is_rational()) {
    r.warnings.push_back("computing over a prime field: answers built from random coefficients are heuristic");
  }
  return r;
}

json report_json(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = kToolVersion;
  j["kind"] = r.kind;
  j["source"] = r.source;
  j["seed"] = r.options.seed;
  j["field"] = field_name(r.options);
  j["nmax"] = r.options.nmax;
  j["red_bound"] = r.options.red_bound;
  j["window"] = std::to_string(r.options.window_lo) + ".." + std::to_string(r.options.window_hi);
  j["warnings"] = r.warnings;
  json tasks = json::array();
  for (const TaskResult& t : r.tasks) {
    json e;
    e["command"] = t.command;
    if (t.ok()) {
      e["result"] = t.result;
    } else {
      e["error"] = {{"code", *t.error_code}, {"message", t.error}};
    }
    if (r.options.timing) e["seconds"] = t.seconds;
    tasks.push_back(std::move(e));
  }
  j["tasks"] = tasks;
  json asserts = json::array();
  std::size_t passed = 0;
  for (const AssertionResult& a : r.assertions) {
    passed += a.pass ? 1 : 0;
    asserts.push_back({{"label", a.label},
                       {"citation", a.citation},
                       {"expected", a.expected},
                       {"observed", a.observed},
                       {"status", a.pass ? "PASS" : "FAIL"}});
  }
  j["assertions"] = asserts;
  j["summary"] = {{"tasks", r.tasks.size()},
                  {"task_errors", static_cast<std::size_t>(std::count_if(
                                      r.tasks.begin(), r.tasks.end(), [](const TaskResult& t) { return !t.ok(); }))},
                  {"assertions", r.assertions.size()},
                  {"passed", passed},
                  {"exit_code", exit_code(r)}};
  return j;
}

std::string report_text(const Report& r) {
  std::string out;
  out += "# " + r.kind + " " + r.source + "\n";
  for (const std::string& w : r.warnings) out += "warning: " + w + "\n";
  for (const TaskResult& t : r.tasks) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", t.seconds);
    out += "\n> " + t.command + "   (" + secs + ")\n";
    if (!t.ok()) {
      out += "  error " + *t.error_code + ": " + t.error + "\n";
      continue;
    }
    for (const std::string& line : t.text) out += "  " + line + "\n";
  }
  if (!r.assertions.empty()) {
    out += "\nassertions:\n";
    for (const AssertionResult& a : r.assertions) {
      out += std::string(a.pass ? "  PASS " : "  FAIL ") + a.label + "\n";
      out += "       expected " + a.expected + ", observed " + a.observed + "\n";
      out += "       source: " + a.citation + "\n";
    }
  }
  return out;
}

int exit_code(const Report& r) {
  bool failed = false;
  for (const TaskResult& t : r.tasks) {
    if (t.ok()) continue;
    if (*t.error_code == to_string(ErrorCode::kResourceLimit) || *t.error_code == to_string(ErrorCode::kParse)) {
      return 2;
    }
    failed = true;
  }
  for (const AssertionResult& a : r.assertions) failed = failed || !a.pass;
  return failed ? 1 : 0;
}

}  // namespace fibrant
