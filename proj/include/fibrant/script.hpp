#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibrant {

struct SourcePos {
  std::size_t line = 1;
  std::size_t col = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// "QQ[x,y] mod (x*y)" or "semigroup<6,11,15,31>".
struct RingDecl {
  bool semigroup = false;
  std::string field;                     // "QQ" or "GF(p)"
  std::vector<std::string> variables;
  std::vector<std::string> relations;    // normalized polynomial text
  std::vector<std::uint32_t> generators; // semigroup generators
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

enum class DeclKind { kRing, kIdeal, kElem };

struct Decl {
  DeclKind kind = DeclKind::kRing;
  std::string name;
  RingDecl ring;
  /// Polynomial text per generator; for semigroup ideals, decimal exponents.
  std::vector<std::string> items;
  SourcePos pos;
  friend bool operator==(const Decl& a, const Decl& b) {
    return a.kind == b.kind && a.name == b.name && a.ring == b.ring && a.items == b.items;
  }
};

/// key=value option. Values: integer "7", range "1..6", word "fiber", list "(u,v)".
struct TaskOption {
  std::string key;
  std::string value;
  friend bool operator==(const TaskOption&, const TaskOption&) = default;
};

struct Task {
  std::string name;
  std::vector<std::string> args;
  std::vector<TaskOption> options;
  SourcePos pos;
  friend bool operator==(const Task& a, const Task& b) {
    return a.name == b.name && a.args == b.args && a.options == b.options;
  }
};

struct Statement {
  bool is_task = false;
  Decl decl;
  Task task;
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.is_task == b.is_task && (a.is_task ? a.task == b.task : a.decl == b.decl);
  }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Parses and checks a script: declarations before use, one ring, task arity
/// and argument kinds. Errors are kParse with a "line:col: " prefix.
Script parse_script(std::string_view text);
std::string pretty_print(const Script& s);

/// Names of the task commands, in grammar order.
const std::vector<std::string>& task_names();

/// Helpers for option values.
std::uint32_t option_uint(const std::string& value);
std::pair<std::uint32_t, std::uint32_t> option_range(const std::string& value);
std::vector<std::string> option_list(const std::string& value);

}  // namespace fibrant
