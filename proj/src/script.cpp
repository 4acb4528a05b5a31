#include "fibrant/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "fibrant/errors.hpp"
#include "fibrant/ring.hpp"
#include "fibrant/semigroup.hpp"

namespace fibrant {

namespace {

enum class ArgKind { kIdeal, kAnyIdeal, kElem };
enum class OptKind { kUint, kRange, kWord, kList };

struct TaskSig {
  std::vector<ArgKind> args;
  std::map<std::string, OptKind> options;
  std::vector<std::string> required;
};

const std::map<std::string, TaskSig>& signatures() {
  using A = ArgKind;
  using O = OptKind;
  static const std::map<std::string, TaskSig> table = {
      {"fiber_series", {{A::kAnyIdeal}, {{"nmax", O::kUint}}, {}}},
      {"assoc_series", {{A::kIdeal}, {{"nmax", O::kUint}}, {}}},
      {"hs_series", {{A::kIdeal}, {{"nmax", O::kUint}}, {}}},
      {"coeffs", {{A::kAnyIdeal}, {{"kind", O::kWord}, {"nmax", O::kUint}}, {}}},
      {"spread", {{A::kIdeal}, {{"nmax", O::kUint}}, {}}},
      {"reduction", {{A::kIdeal, A::kIdeal}, {{"bound", O::kUint}}, {}}},
      {"min_reduction", {{A::kIdeal}, {{"seed", O::kUint}, {"trials", O::kUint}, {"bound", O::kUint}}, {}}},
      {"rr_closure", {{A::kIdeal}, {{"bound", O::kUint}}, {}}},
      {"vv", {{A::kAnyIdeal, A::kAnyIdeal}, {{"window", O::kRange}}, {}}},
      {"v2inf", {{A::kIdeal, A::kIdeal}, {{"window", O::kRange}}, {}}},
      {"superficial", {{A::kElem, A::kIdeal}, {{"window", O::kRange}}, {}}},
      {"rees_superficial", {{A::kElem, A::kIdeal}, {{"r", O::kRange}, {"s", O::kUint}}, {}}},
      {"filter_regular", {{A::kElem, A::kIdeal}, {{"window", O::kRange}}, {}}},
      {"complexC", {{A::kIdeal, A::kIdeal}, {{"n", O::kUint}}, {}}},
      {"complexD", {{A::kIdeal, A::kIdeal}, {{"n", O::kUint}}, {}}},
      {"resolution", {{A::kIdeal, A::kIdeal}, {{"n", O::kUint}, {"nmax", O::kUint}}, {}}},
      {"thm_l2", {{A::kIdeal, A::kIdeal}, {{"window", O::kRange}, {"nmax", O::kUint}, {"grade", O::kList}}, {}}},
      {"thm_l3",
       {{A::kIdeal, A::kIdeal},
        {{"window", O::kRange}, {"nmax", O::kUint}, {"depth", O::kList}, {"grade", O::kList}},
        {}}},
      {"higher",
       {{A::kIdeal, A::kIdeal}, {{"xs", O::kList}, {"window", O::kRange}, {"nmax", O::kUint}}, {"xs"}}},
  };
  return table;
}

enum class Tok { kIdent, kInt, kSym, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourcePos pos;
};

[[noreturn]] void error_at(const SourcePos& p, const std::string& msg) {
  fail(ErrorCode::kParse, std::to_string(p.line) + ":" + std::to_string(p.col) + ": " + msg);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos p;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t t = 0; t < k; ++t, ++i) {
      if (text[i] == '\n') {
        ++p.line;
        p.col = 1;
      } else {
        ++p.col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), p});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kInt, std::string(text.substr(i, j - i)), p});
      advance(j - i);
    } else if (c == '.' && i + 1 < text.size() && text[i + 1] == '.') {
      out.push_back({Tok::kSym, "..", p});
      advance(2);
    } else if (std::string_view("=;,[]()<>^*+-/").find(c) != std::string_view::npos) {
      out.push_back({Tok::kSym, std::string(1, c), p});
      advance(1);
    } else {
      error_at(p, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", p});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Script run() {
    Script s;
    while (peek().kind != Tok::kEnd) {
      const Token& t = peek();
      if (t.kind != Tok::kIdent) error_at(t.pos, "expected 'ring', 'ideal', 'elem' or 'task'");
      Statement st;
      if (t.text == "task") {
        st.is_task = true;
        st.task = task();
      } else if (t.text == "ring" || t.text == "ideal" || t.text == "elem") {
        st.decl = decl();
      } else {
        error_at(t.pos, "expected 'ring', 'ideal', 'elem' or 'task', got '" + t.text + "'");
      }
      s.statements.push_back(std::move(st));
    }
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  bool accept(const std::string& sym) {
    if (peek().kind == Tok::kSym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& expect(const std::string& sym) {
    if (peek().kind != Tok::kSym || peek().text != sym) error_at(peek().pos, "expected '" + sym + "'" + got());
    return next();
  }
  const Token& expect_kind(Tok k, const char* what) {
    if (peek().kind != k) error_at(peek().pos, std::string("expected ") + what + got());
    return next();
  }
  std::string got() const {
    return peek().kind == Tok::kEnd ? ", got end of input" : ", got '" + peek().text + "'";
  }

  std::uint32_t small_int(const Token& t) {
    if (t.text.size() > 9) error_at(t.pos, "integer too large");
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  void declare(const Token& name, DeclKind kind) {
    if (names_.count(name.text)) error_at(name.pos, "'" + name.text + "' is already declared");
    names_[name.text] = kind;
  }

  Decl decl() {
    Decl d;
    const Token& kw = next();
    d.pos = kw.pos;
    d.kind = kw.text == "ring" ? DeclKind::kRing : kw.text == "ideal" ? DeclKind::kIdeal : DeclKind::kElem;
    const Token& name = expect_kind(Tok::kIdent, "an identifier");
    d.name = name.text;
    expect("=");
    if (d.kind == DeclKind::kRing) {
      if (have_ring_) error_at(kw.pos, "only one ring per script");
      d.ring = ring_spec();
      have_ring_ = true;
      semigroup_ = d.ring.semigroup;
    } else {
      if (!have_ring_) error_at(kw.pos, "declare the ring first");
      if (d.kind == DeclKind::kElem) {
        d.items.push_back(item(";"));
      } else {
        d.items = item_list(";");
      }
    }
    expect(";");
    declare(name, d.kind);
    return d;
  }

  RingDecl ring_spec() {
    RingDecl r;
    const Token& head = expect_kind(Tok::kIdent, "a field or 'semigroup'");
    if (head.text == "semigroup") {
      r.semigroup = true;
      expect("<");
      do {
        r.generators.push_back(small_int(expect_kind(Tok::kInt, "a semigroup generator")));
      } while (accept(","));
      expect(">");
      try {
        NumericalSemigroup check(r.generators);
      } catch (const Error& e) {
        error_at(head.pos, e.what());
      }
      return r;
    }
    if (head.text == "QQ") {
      r.field = "QQ";
    } else if (head.text == "GF") {
      expect("(");
      const Token& p = expect_kind(Tok::kInt, "a prime");
      expect(")");
      r.field = "GF(" + p.text + ")";
      try {
        Field::prime(small_int(p));
      } catch (const Error& e) {
        error_at(p.pos, e.what());
      }
    } else {
      error_at(head.pos, "unknown field '" + head.text + "', expected QQ, GF(p) or semigroup");
    }
    expect("[");
    do {
      const Token& v = expect_kind(Tok::kIdent, "a variable name");
      if (std::find(r.variables.begin(), r.variables.end(), v.text) != r.variables.end()) {
        error_at(v.pos, "duplicate variable '" + v.text + "'");
      }
      r.variables.push_back(v.text);
    } while (accept(","));
    expect("]");
    variables_ = r.variables;
    if (peek().kind == Tok::kIdent && peek().text == "mod") {
      next();
      expect("(");
      r.relations = item_list(")");
      expect(")");
    }
    return r;
  }

  std::vector<std::string> item_list(const std::string& close) {
    std::vector<std::string> out;
    do {
      out.push_back(item(close));
    } while (accept(","));
    return out;
  }

  /// One polynomial (or one exponent in a semigroup ring), normalized to its
  /// tokens without spaces and checked against the ring's variables.
  std::string item(const std::string& close) {
    const SourcePos start = peek().pos;
    std::string text;
    std::vector<std::pair<std::size_t, SourcePos>> offsets;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::kEnd) break;
      if (t.kind == Tok::kSym && depth == 0 && (t.text == "," || t.text == ";" || t.text == close)) break;
      if (t.kind == Tok::kSym && t.text == "(") ++depth;
      if (t.kind == Tok::kSym && t.text == ")") --depth;
      offsets.emplace_back(text.size(), t.pos);
      text += t.text;
      next();
    }
    if (text.empty()) error_at(start, "expected a polynomial" + got());
    if (semigroup_) {
      if (offsets.size() != 1 || !std::isdigit(static_cast<unsigned char>(text[0]))) {
        error_at(start, "semigroup ring elements are exponents (nonnegative integers)");
      }
      return text;
    }
    try {
      RingSignature sig;
      sig.nvars = variables_.size();
      parse_polynomial(text, variables_, sig);
    } catch (const Error& e) {
      // The polynomial parser reports "column k: ..."; map k back to a token.
      std::string msg = e.what();
      SourcePos where = start;
      if (msg.rfind("column ", 0) == 0) {
        const std::size_t colon = msg.find(':');
        const std::size_t col = std::stoul(msg.substr(7, colon - 7)) - 1;
        for (const auto& [off, p] : offsets) {
          if (off <= col) where = p;
        }
        msg = msg.substr(colon + 2);
      }
      error_at(where, msg);
    }
    return text;
  }

  Task task() {
    Task t;
    t.pos = next().pos;
    const Token& name = expect_kind(Tok::kIdent, "a task name");
    t.name = name.text;
    auto sig_it = signatures().find(t.name);
    if (sig_it == signatures().end()) error_at(name.pos, "unknown task '" + t.name + "'");
    if (!have_ring_) error_at(t.pos, "declare the ring first");
    const TaskSig& sig = sig_it->second;
    std::vector<Token> positional;
    while (!(peek().kind == Tok::kSym && peek().text == ";")) {
      const Token& id = expect_kind(Tok::kIdent, "an argument or ';'");
      if (accept("=")) {
        auto o = sig.options.find(id.text);
        if (o == sig.options.end()) error_at(id.pos, "task '" + t.name + "' has no option '" + id.text + "'");
        t.options.push_back({id.text, option_value(o->second, id)});
      } else {
        positional.push_back(id);
      }
    }
    expect(";");
    if (positional.size() != sig.args.size()) {
      error_at(name.pos, "task '" + t.name + "' takes " + std::to_string(sig.args.size()) + " arguments, got " +
                             std::to_string(positional.size()));
    }
    for (std::size_t k = 0; k < positional.size(); ++k) {
      check_arg(positional[k], sig.args[k]);
      t.args.push_back(positional[k].text);
    }
    for (const std::string& req : sig.required) {
      if (std::none_of(t.options.begin(), t.options.end(), [&](const TaskOption& o) { return o.key == req; })) {
        error_at(name.pos, "task '" + t.name + "' needs option '" + req + "'");
      }
    }
    return t;
  }

  void check_arg(const Token& id, ArgKind kind) {
    auto it = names_.find(id.text);
    if (it == names_.end()) error_at(id.pos, "undeclared identifier '" + id.text + "'");
    const bool want_elem = kind == ArgKind::kElem;
    if (it->second == DeclKind::kRing) error_at(id.pos, "'" + id.text + "' is the ring, not an argument");
    if (want_elem != (it->second == DeclKind::kElem)) {
      error_at(id.pos, "'" + id.text + "' must be " + (want_elem ? "an elem" : "an ideal"));
    }
    if (semigroup_ && kind != ArgKind::kAnyIdeal) {
      error_at(id.pos, "ring mismatch: this task needs a polynomial ring, '" + id.text + "' lives in a semigroup ring");
    }
  }

  std::string option_value(OptKind kind, const Token& key) {
    switch (kind) {
      case OptKind::kUint: {
        const Token& v = expect_kind(Tok::kInt, "an integer");
        small_int(v);
        return v.text;
      }
      case OptKind::kRange: {
        const Token& lo = expect_kind(Tok::kInt, "a range lo..hi");
        expect("..");
        const Token& hi = expect_kind(Tok::kInt, "a range lo..hi");
        if (small_int(lo) > small_int(hi)) error_at(lo.pos, "empty range");
        return lo.text + ".." + hi.text;
      }
      case OptKind::kWord: {
        const Token& w = expect_kind(Tok::kIdent, "a word");
        if (key.text == "kind" && w.text != "fiber" && w.text != "hs") error_at(w.pos, "kind is fiber or hs");
        return w.text;
      }
      case OptKind::kList: {
        expect("(");
        std::string out = "(";
        do {
          const Token& e = expect_kind(Tok::kIdent, "an elem name");
          check_arg(e, ArgKind::kElem);
          out += (out.size() > 1 ? "," : "") + e.text;
        } while (accept(","));
        expect(")");
        return out + ")";
      }
    }
    return {};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool have_ring_ = false;
  bool semigroup_ = false;
  std::vector<std::string> variables_;
  std::map<std::string, DeclKind> names_;
};

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
  return out;
}

}  // namespace

Script parse_script(std::string_view text) { return Parser(text).run(); }

std::string pretty_print(const Script& s) {
  std::string out;
  for (const Statement& st : s.statements) {
    if (st.is_task) {
      out += "task " + st.task.name;
      for (const std::string& a : st.task.args) out += " " + a;
      for (const TaskOption& o : st.task.options) out += " " + o.key + "=" + o.value;
      out += ";\n";
      continue;
    }
    const Decl& d = st.decl;
    switch (d.kind) {
      case DeclKind::kRing:
        out += "ring " + d.name + " = ";
        if (d.ring.semigroup) {
          std::vector<std::string> g;
          for (std::uint32_t x : d.ring.generators) g.push_back(std::to_string(x));
          out += "semigroup<" + join(g, ",") + ">";
        } else {
          out += d.ring.field + "[" + join(d.ring.variables, ",") + "]";
          if (!d.ring.relations.empty()) out += " mod (" + join(d.ring.relations, ", ") + ")";
        }
        break;
      case DeclKind::kIdeal:
        out += "ideal " + d.name + " = " + join(d.items, ", ");
        break;
      case DeclKind::kElem:
        out += "elem " + d.name + " = " + d.items.front();
        break;
    }
    out += ";\n";
  }
  return out;
}

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = {
      "fiber_series", "assoc_series", "hs_series", "coeffs",    "spread",   "reduction",  "min_reduction",
      "rr_closure",   "vv",           "v2inf",     "superficial", "rees_superficial", "filter_regular",
      "complexC",     "complexD",     "resolution", "thm_l2",   "thm_l3",   "higher"};
  return names;
}

std::uint32_t option_uint(const std::string& value) { return static_cast<std::uint32_t>(std::stoul(value)); }

std::pair<std::uint32_t, std::uint32_t> option_range(const std::string& value) {
  const std::size_t dots = value.find("..");
  return {option_uint(value.substr(0, dots)), option_uint(value.substr(dots + 2))};
}

std::vector<std::string> option_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value.substr(1, value.size() - 2)) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace fibrant
