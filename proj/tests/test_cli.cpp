#include <doctest.h>

#include <algorithm>

#include "fibrant/corpus.hpp"
#include "fibrant/errors.hpp"
#include "fibrant/report.hpp"
#include "fibrant/ring.hpp"
#include "fibrant/script.hpp"

using namespace fibrant;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_script(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every example script parses and round-trips") {
  for (const ExampleInfo& info : list_examples()) {
    const Script s = parse_script(example_script(info.name));
    CHECK(parse_script(pretty_print(s)) == s);
    CHECK(pretty_print(parse_script(pretty_print(s))) == pretty_print(s));
  }
}

TEST_CASE("grammar pieces") {
  const Script s = parse_script(
      "# comment\n"
      "ring A = GF(101)[x,y] mod (x^2*y);\n"
      "ideal I = x^2, x*y , y^3;\n"
      "elem f = x + 2*y;\n"
      "task thm_l2 I I window=2..5 nmax=9 grade=(f);\n");
  REQUIRE(s.statements.size() == 4);
  CHECK(s.statements[0].decl.ring.field == "GF(101)");
  CHECK(s.statements[0].decl.ring.relations == std::vector<std::string>{"x^2*y"});
  CHECK(s.statements[1].decl.items == std::vector<std::string>{"x^2", "x*y", "y^3"});
  const Task& t = s.statements[3].task;
  CHECK(t.name == "thm_l2");
  CHECK(option_range(t.options[0].value) == std::pair<std::uint32_t, std::uint32_t>{2, 5});
  CHECK(option_uint(t.options[1].value) == 9);
  CHECK(option_list(t.options[2].value) == std::vector<std::string>{"f"});
  CHECK(std::find(task_names().begin(), task_names().end(), "thm_l3") != task_names().end());
}

TEST_CASE("errors report line and column") {
  CHECK(parse_error("ring A = QQ[x,y];\nideal I = x, z;\n").rfind("2:", 0) == 0);
  CHECK(parse_error("ring A = QQ[x,y];\ntask fiber_series K;\n").find("K") != std::string::npos);
  CHECK(parse_error("ring A = QQ[x,y];\nideal I = x;\ntask reduction I;\n").rfind("3:", 0) == 0);
  CHECK(!parse_error("ring A = QQ[x,y];\nideal I = x;\ntask fiber_series I nmax=abc;\n").empty());
  CHECK(!parse_error("ring A = QQ[x,y];\nideal I = x;\ntask frobnicate I;\n").empty());
  CHECK(!parse_error("ring A = QQ[x,y];\nideal I = x\n").empty());
  CHECK(!parse_error("ideal I = x;\n").empty());
  CHECK(!parse_error("ring A = QQ[x];\nring B = QQ[y];\n").empty());
  // semigroup rings take only ideal-level tasks
  CHECK(!parse_error("ring T = semigroup<3,5>;\nideal K = 3, 5;\ntask assoc_series K;\n").empty());
  CHECK(!parse_error("ring A = QQ[x,y];\nideal I = x;\ntask higher I I;\n").empty());
}

TEST_CASE("script reports are deterministic and well formed") {
  const std::string text =
      "ring A = QQ[x,y];\n"
      "ideal I = x^3, x^2*y, y^3;\n"
      "task fiber_series I;\n"
      "task min_reduction I seed=5;\n"
      "task complexC I I n=1;\n";
  RunOptions opts;
  const Script s = parse_script(text);
  const Report a = make_script_report(s, "mem", opts);
  const Report b = make_script_report(s, "mem", opts);
  const auto ja = report_json(a), jb = report_json(b);
  CHECK(ja.dump() == jb.dump());
  CHECK(ja.at("schema") == kReportSchema);
  CHECK(ja.dump().find("seconds") == std::string::npos);
  CHECK(nlohmann::ordered_json::parse(ja.dump(2)) == ja);
  CHECK(exit_code(a) == 1);  // complexC with J = I not generated by two elements
  CHECK_FALSE(report_text(a).empty());
}

TEST_CASE("exit codes") {
  RunOptions opts;
  const Report ok = make_script_report(parse_script("ring A = QQ[x];\nideal I = x;\ntask fiber_series I;\n"), "ok", opts);
  CHECK(exit_code(ok) == 0);
  const Report empty = make_script_report(parse_script("ring A = QQ[x];\n"), "empty", opts);
  CHECK(exit_code(empty) == 0);
  CHECK(report_json(empty).at("tasks").empty());
  RunOptions fp = opts;
  fp.field = Field::prime(32003);
  const Report w = make_script_report(parse_script("ring A = QQ[x];\nideal I = x;\ntask fiber_series I;\n"), "fp", fp);
  CHECK_FALSE(w.warnings.empty());
}

TEST_CASE("examples run and long ones need consent") {
  RunOptions opts;
  const Report r = run_example("grade-one-maximal", opts, false);
  CHECK(exit_code(r) == 0);
  for (const auto& a : r.assertions) CHECK_MESSAGE(a.pass, a.label);
  CHECK_THROWS_AS(run_example("nonnegative-a", opts, false), Error);
  CHECK_THROWS_AS(example_script("no-such-example"), Error);
}

TEST_CASE("the semigroup presentation is killed by the monomial parametrization") {
  const Script s = parse_script(example_script("semigroup-extension"));
  const RingDecl& ring = s.statements.at(0).decl.ring;
  const RingPtr r = AmbientRing::make(ring.variables, Field::rationals());
  const std::vector<long> weights = {6, 11, 15, 31, 1, 1};
  REQUIRE(ring.relations.size() == 10);
  for (const std::string& text : ring.relations) {
    const Polynomial f = r->parse(text);
    CHECK_MESSAGE(is_weighted_homogeneous(f, weights), text);
    Scalar sum = Scalar::zero(Field::rationals());
    for (const Term& t : f.terms()) sum += t.coeff;
    CHECK_MESSAGE(sum.is_zero(), text);
  }
}
