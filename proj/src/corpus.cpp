#include "fibrant/corpus.hpp"

#include <functional>

#include "fibrant/errors.hpp"
#include "fibrant/invariants.hpp"
#include "fibrant/reductions.hpp"

namespace fibrant {

namespace {

using Observe = std::function<std::string(const ScriptRun&)>;

struct Check {
  std::string label;
  std::string citation;
  std::string expected;
  Observe observe;
};

struct ExampleDef {
  ExampleInfo info;
  std::string script;
  std::uint32_t window_lo = 1;
  std::uint32_t window_hi = 6;
  std::vector<Check> checks;
};

/// The JSON value at `pointer` in task k's result, dumped compactly.
Observe at(std::size_t k, std::string pointer) {
  return [k, pointer](const ScriptRun& run) -> std::string {
    const TaskResult& t = run.tasks.at(k);
    if (!t.ok()) return "error " + *t.error_code;
    const nlohmann::ordered_json::json_pointer p(pointer);
    if (!t.result.contains(p)) return "missing " + pointer;
    const auto& v = t.result.at(p);
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Sum of the alphas in task k's resolution entry e (or the task itself).
Observe alpha_sum(std::size_t k, std::string pointer) {
  return [k, pointer](const ScriptRun& run) -> std::string {
    const TaskResult& t = run.tasks.at(k);
    if (!t.ok()) return "error " + *t.error_code;
    std::int64_t s = 0;
    for (const auto& a : t.result.at(nlohmann::ordered_json::json_pointer(pointer))) s += a.get<std::int64_t>();
    return std::to_string(s);
  };
}

/// "n: sum alpha, beta1" over the resolutions a theorem task computed.
Observe resolution_table(std::size_t k) {
  return [k](const ScriptRun& run) -> std::string {
    const TaskResult& t = run.tasks.at(k);
    if (!t.ok()) return "error " + *t.error_code;
    std::string out;
    for (const auto& r : t.result.at("resolution")) {
      std::int64_t s = 0;
      for (const auto& a : r.at("alphas")) s += a.get<std::int64_t>();
      out += (out.empty() ? "" : "; ") + std::string("n=") + r.at("n").dump() + ": sum " + std::to_string(s) +
             ", beta1 " + r.at("beta1").dump();
    }
    return out;
  };
}

Observe has_note(std::size_t k, std::string needle) {
  return [k, needle](const ScriptRun& run) -> std::string {
    const TaskResult& t = run.tasks.at(k);
    if (!t.ok()) return "error " + *t.error_code;
    for (const auto& n : t.result.at("notes")) {
      if (n.get<std::string>().find(needle) != std::string::npos) return "noted";
    }
    return "absent";
  };
}

const char* const kPresentationT =
    "y^2*z - x*w, x^2*z^2 - y*w, x^3*z - y^3, x^3*y*w - z^4, z^5 - y^4*w, x*y*z^3 - w^2, y^5 - w*x^4, "
    "x^2*y^3 - z^3, x^5 - z^2, x^4*y^2 - z*w";

std::vector<ExampleDef> build_corpus() {
  std::vector<ExampleDef> c;

  {
    ExampleDef e;
    e.info = {"marley", "Marley's ideal (X^7, X^6Y, XY^6, Y^7): f1 = f0 - 1 with F(I) not Cohen-Macaulay", false};
    e.script =
        "ring A = QQ[x,y];\n"
        "ideal I = x^7, x^6*y, x*y^6, y^7;\n"
        "ideal J = x^7, y^7;\n"
        "task fiber_series I;\n"
        "task coeffs I;\n"
        "task coeffs I kind=hs nmax=10;\n"
        "task thm_l2 I J window=1..8;\n"
        "task complexC I J n=6;\n";
    e.window_hi = 8;
    const std::string cite = "Marley's example: \"the Hilbert series of the fiber cone F(I) is (1 + 2z + 2z^2 + 2z^3 "
                             "+ 2z^4 + 2z^5 - 4z^6)/(1-z)^2\"";
    e.checks = {
        {"fiber numerator", cite, "[1,2,2,2,2,2,-4]", at(0, "/numerator")},
        {"f0, f1", "Marley's example: \"f_0(I) = 7, f_1(I) = 6\"", "[7,6]", at(1, "/entries")},
        {"e2 from the Hilbert-Samuel series", "Marley's example: \"e_2(I) = 0\"", "0", at(2, "/entries/2")},
        {"a(I) < 0 from the reduction numbers of J^[n] on I^n", "Marley's example with Hoa's reduction-number criterion",
         "HOLDS", at(3, "/hypotheses/0/status")},
        {"f1 <= f0 - 1", "\"f_1(I) <= f_0(I) - 1\" when a(I) < 0", "true", at(3, "/conclusion/holds")},
        {"equality f1 = f0 - 1", "equality holds when grade(I) = 2", "noted", has_note(3, "expected and observed")},
        {"F(I) not Cohen-Macaulay", "Marley's example: \"F(I) is not Cohen-Macaulay\"", "noted",
         has_note(3, "not Cohen-Macaulay")},
        {"resolutions of F(I^n): sum alpha and beta1 on the stable window",
         "\"F(I^n) is Cohen-Macaulay for all n >> 0\"; \"f_1(I) - f_0(I) + 1 = -sum alpha_i\"",
         "n=5: sum 0, beta1 0; n=6: sum 0, beta1 0; n=7: sum 0, beta1 0; n=8: sum 0, beta1 0", resolution_table(3)},
        {"H1 of C. at n = 6", "\"1 - f_0 + f_1 = -l(H_1)\"", "0", at(4, "/homology/1")},
    };
    c.push_back(std::move(e));
  }

  {
    ExampleDef e;
    e.info = {"grade-one-maximal", "m in k[x1,x2,x3]/(x1^2, x1x2): a(m) < 0 and grade 1 give f1 < f0 - 1", false};
    e.script =
        "ring A = QQ[x1,x2,x3] mod (x1^2, x1*x2);\n"
        "ideal M = x1, x2, x3;\n"
        "ideal J = x2, x3;\n"
        "elem a = x1;\n"
        "elem c = x3;\n"
        "task fiber_series M;\n"
        "task coeffs M;\n"
        "task filter_regular c M window=1..8;\n"
        "task filter_regular a M window=1..8;\n"
        "task rees_superficial a M;\n"
        "task thm_l2 M J;\n"
        "task complexC M J n=2;\n"
        "task resolution M J n=2;\n";
    const std::string cite = "\"the Hilbert-series of F(m) = G(m) is (1+z-z^2)/(1-z)^2\"";
    e.checks = {
        {"fiber series", cite, "(1 + z - z^2)/(1 - z)^2", at(0, "/series")},
        {"f0, f1", "\"f_1(m) = -1 but f_0(m) = 1\"", "[1,-1]", at(1, "/entries")},
        {"x3 filter-regular", "\"x_3 is a non-zero divisor\"", "HOLDS", at(2, "/status")},
        {"x1 filter-regular", "derived: x1 kills x2, so x1 * x2 x3^j lies in m I^{j+1}", "FAILS", at(3, "/status")},
        {"x1 Rees-superficial", "derived: x1 m^k is spanned by x1 x3^k, one form in each degree", "HOLDS",
         at(4, "/status")},
        {"grade hypothesis", "\"grade(m) = 1\"", "FAILS", at(5, "/hypotheses/1/status")},
        {"a(m) < 0", "\"m^2 = J m\"; \"a(m) < 0\"", "HOLDS", at(5, "/hypotheses/0/status")},
        {"strict inequality f1 < f0 - 1", "\"f_1(I) < f_0(I) - 1 is possible\"", "-1 < 0",
         [](const ScriptRun& run) -> std::string {
           const TaskResult& t = run.tasks.at(5);
           if (!t.ok()) return "error " + *t.error_code;
           const auto& cc = t.result.at("conclusion");
           const auto l = cc.at("lhs").get<std::int64_t>();
           const auto r = cc.at("rhs").get<std::int64_t>();
           return std::to_string(l) + (l < r ? " < " : l == r ? " = " : " > ") + std::to_string(r);
         }},
        {"H1 of C. at n = 2", "\"1 - f_0 + f_1 = -l(H_1)\" with f_0 = 1, f_1 = -1", "1", at(6, "/homology/1")},
        {"sum alpha at n = 2", "\"f_1(I) - f_0(I) + 1 = -sum alpha_i\"", "1", alpha_sum(7, "/alphas")},
    };
    c.push_back(std::move(e));
  }

  {
    ExampleDef e;
    e.info = {"semigroup", "K = (t^6, t^11, t^31) in k[[t^6, t^11, t^15, t^31]]: G(K) Cohen-Macaulay, F(K) not", false};
    e.script =
        "ring T = semigroup<6,11,15,31>;\n"
        "ideal K = 6, 11, 31;\n"
        "ideal L = 6;\n"
        "task fiber_series K nmax=10;\n"
        "task vv L K window=1..4;\n";
    auto sg = [](const ScriptRun& run, const char* n) { return run.env.sg_ideal(n); };
    e.checks = {
        {"K^3 = L K^2", "\"K^3 = LK^2\"", "true",
         [sg](const ScriptRun& r) {
           return yes_no(sg_ideal_power(sg(r, "K"), 3) == sg_ideal_product(sg(r, "L"), sg_ideal_power(sg(r, "K"), 2)));
         }},
        {"K^2 meets L in L K", "\"K^2 cap L = LK\"", "true",
         [sg](const ScriptRun& r) {
           return yes_no(sg_intersection(sg_ideal_power(sg(r, "K"), 2), sg(r, "L")) ==
                         sg_ideal_product(sg(r, "L"), sg(r, "K")));
         }},
        {"t^37 in m K^2", "\"t^37 in m K^2\"", "true",
         [sg](const ScriptRun& r) {
           const SemigroupIdeal m = sg_maximal_ideal(r.env.semigroup);
           return yes_no(sg_membership(37, sg_ideal_product(m, sg_ideal_power(sg(r, "K"), 2))));
         }},
        {"t^37 not in m L K", "\"t^37 notin m LK\"", "false",
         [sg](const ScriptRun& r) {
           const SemigroupIdeal m = sg_maximal_ideal(r.env.semigroup);
           return yes_no(sg_membership(37, sg_ideal_product(m, sg_ideal_product(sg(r, "L"), sg(r, "K")))));
         }},
        {"H(F(K), z)", "\"the Hilbert-Series of F(K) is (1 + 2z)/(1-z)\"", "(1 + 2z)/(1 - z)", at(0, "/series")},
        {"G(K) Cohen-Macaulay via the intersection criterion", "\"G(K) is Cohen-Macaulay by a result of Valabrega and Valla\"",
         "HOLDS", at(1, "/status")},
        {"F(K) over the presentation B = k[[x,y,z,w]]/q", "\"B is isomorphic to T\"; (x,y,w) maps to K",
         "(1 + 2z)/(1 - z)",
         [](const ScriptRun&) {
           auto free = AmbientRing::make({"x", "y", "z", "w"}, Field::rationals());
           auto b = AmbientRing::from_polynomials({"x", "y", "z", "w"}, Field::rationals(),
                                                  free->parse_list(kPresentationT));
           return fiber_hilbert(IdealHandle::parse(b, "x, y, w"), 8).form().to_string();
         }},
        {"lifted series for I = (x,y,w,U,V) in B[[U,V]]", "\"F(I) = F(K)[U,V]\"", "(1 + 2z)/(1 - z)^3",
         [](const ScriptRun&) {
           auto free = AmbientRing::make({"x", "y", "z", "w", "U", "V"}, Field::rationals());
           auto a = AmbientRing::from_polynomials({"x", "y", "z", "w", "U", "V"}, Field::rationals(),
                                                  free->parse_list(kPresentationT));
           return fiber_hilbert(IdealHandle::parse(a, "x, y, w, U, V"), 8).form().to_string();
         }},
    };
    c.push_back(std::move(e));
  }

  {
    ExampleDef e;
    e.info = {"semigroup-extension", "(x,y,w,U,V) in B[[U,V]]: every hypothesis of the spread-3 inequality holds", false};
    e.script = std::string("ring A = QQ[x,y,z,w,u,v] mod (") + kPresentationT +
               ");\n"
               "ideal I = x, y, w, u, v;\n"
               "ideal J = x, u, v;\n"
               "task fiber_series I nmax=8;\n"
               "task reduction J I;\n"
               "task v2inf I J window=1..3;\n"
               "task thm_l3 I J nmax=8;\n";
    e.checks = {
        {"H(F(I), z)", "\"F(I) = F(K)[U,V]\"", "(1 + 2z)/(1 - z)^3", at(0, "/series")},
        {"red_J(I)", "\"I^3 = JI^2\"", "2", at(1, "/red")},
        {"I^{2n} meets J^[n] in J^[n] I^n", "\"the hypothesis of the theorem holds\"", "HOLDS", at(2, "/status")},
        {"grade(I) = 3", "\"A is Cohen-Macaulay of dimension 3\"", "HOLDS", at(3, "/hypotheses/0/status")},
        {"a(I) < 0", "reduction number two with G(I) Cohen-Macaulay", "HOLDS", at(3, "/hypotheses/2/status")},
        {"f2 >= f1 - f0 + 1", "\"f_2(I) >= f_1(I) - f_0(I) + 1\"", "true", at(3, "/conclusion/holds")},
    };
    c.push_back(std::move(e));
  }

  {
    ExampleDef e;
    e.info = {"grade-deficit", "m in k[[x,y,u,v]]/(xy, y^3): grade 2 < l = 3 breaks f2 >= f1 - f0 + 1", false};
    e.script =
        "ring A = QQ[x,y,u,v] mod (x*y, y^3);\n"
        "ideal M = x, y, u, v;\n"
        "ideal J = x, u, v;\n"
        "task fiber_series M;\n"
        "task coeffs M;\n"
        "task v2inf M J window=1..3;\n"
        "task thm_l3 M J;\n"
        "task complexD M J n=1;\n";
    e.checks = {
        {"H(F(m), z)", "\"Hilbert series of F(m) = G(m) is (1+ z -z^3)/(1-z)^3\"", "(1 + z - z^3)/(1 - z)^3",
         at(0, "/series")},
        {"f0, f1, f2", "\"f_0(I) = 1, f_1(I) = -2 and f_2(I) = -3\"", "[1,-2,-3]", at(1, "/entries")},
        {"m^{2n} meets J^[n] in J^[n] m^n, n = 1..3", "\"m^{2n} cap J^[n] = J^[n] m^n for all n >= 1\"", "HOLDS",
         at(2, "/status")},
        {"grade hypothesis", "\"grade(m) = 2 while l(m) = dim A = 3\"", "FAILS", at(3, "/hypotheses/0/status")},
        {"conclusion", "\"f_2(I) ngeq f_1(I) - f_0(I) + 1\"", "-3 >= -2 is false",
         [](const ScriptRun& run) -> std::string {
           const TaskResult& t = run.tasks.at(3);
           if (!t.ok()) return "error " + *t.error_code;
           const auto& cc = t.result.at("conclusion");
           return cc.at("lhs").dump() + " >= " + cc.at("rhs").dump() + " is " + cc.at("holds").dump();
         }},
        {"failure pattern", "only the grade hypothesis fails", "noted", has_note(3, "grade deficit")},
        {"D. Euler identity at n = 1", "\"well-known fact of complexes\"", "true", at(4, "/euler")},
    };
    c.push_back(std::move(e));
  }

  {
    ExampleDef e;
    e.info = {"intersection-failure", "(X^4, X^3Y, XY^3, Y^4, Z): only the intersection hypothesis fails", false};
    e.script =
        "ring A = QQ[x,y,z];\n"
        "ideal I = x^4, x^3*y, x*y^3, y^4, z;\n"
        "ideal J = x^4, y^4, z;\n"
        "ideal Q = x^4, x^3*y, x*y^3, y^4;\n"
        "elem w = z;\n"
        "task reduction J I;\n"
        "task fiber_series I;\n"
        "task coeffs I;\n"
        "task rr_closure I;\n"
        "task rr_closure Q;\n"
        "task thm_l3 I J;\n"
        "task complexD I J n=1;\n"
        "task higher I J xs=(w);\n";
    e.checks = {
        {"red_J(I)", "\"I^3 = JI^2\"", "2", at(0, "/red")},
        {"fiber numerator", "\"the Hilbert series of F(I) is (1 + 2z + 2z^2 - z^3)/(1-z)^3\"", "[1,2,2,-1]",
         at(1, "/numerator")},
        {"f0, f1, f2", "\"f_0(I) = 4, f_1(I) = 3 and f_2(I) = -1\"", "[4,3,-1]", at(2, "/entries")},
        {"Ratliff-Rush closure of I", "\"In particular the Ratliff-Rush closure of I is I\"", "true",
         at(3, "/equals_input")},
        {"Ratliff-Rush closure of q", "\"One can show the Ratliff-Rush closure of q is not q\"", "false",
         at(4, "/equals_input")},
        {"grade(I) = 3", "only hypothesis (b) is not satisfied", "HOLDS", at(5, "/hypotheses/0/status")},
        {"intersection hypothesis", "only hypothesis (b) is not satisfied", "FAILS", at(5, "/hypotheses/1/status")},
        {"a(I) < 0", "\"I^3 = JI^2. So ... a(I) < 0\"", "HOLDS", at(5, "/hypotheses/2/status")},
        {"conclusion", "\"f_2(I) ngeq f_1(I) - f_0(I) + 1\"", "false", at(5, "/conclusion/holds")},
        {"D. Euler identity at n = 1", "\"well-known fact of complexes\"", "true", at(6, "/euler")},
        {"f0, f1 after cutting by Z", "\"f_i(K) = f_i(I) for i = 0, ..., l(I) - 2\"", "[4,3]", at(7, "/coefficients")},
    };
    c.push_back(std::move(e));
  }

  {
    ExampleDef e;
    e.info = {"nonnegative-a", "(X^3, XY^4Z, XY^5, Z^5, Y^7): a(I) >= 0 although depth G(I) = 2 (LONG)", true};
    e.script =
        "ring A = QQ[x,y,z];\n"
        "ideal I = x^3, x*y^4*z, x*y^5, z^5, y^7;\n"
        "ideal J = z^5, 5*x^3 + 3*y^7, x^3 - 3*x*y^4*z + 2*z^5;\n"
        "elem u = z^5;\n"
        "elem v = 5*x^3 + 3*y^7;\n"
        "task reduction J I bound=6;\n"
        "task assoc_series I nmax=8;\n"
        "task fiber_series I nmax=8;\n"
        "task coeffs I nmax=8;\n"
        "task thm_l3 I J nmax=8 window=1..2 depth=(u,v);\n";
    e.window_hi = 2;
    e.checks = {
        {"red_J(I)", "\"I^6 = JI^5\"", "5", at(0, "/red")},
        {"I^9 vs J^[3] I^6", "\"I^9 != I^6 J^[3]\"", "different",
         [](const ScriptRun& run) -> std::string {
           const IdealHandle& i = run.env.ideal("I");
           return reduces_at(bracket_power(run.env.ideal("J"), 3), i.power(3), 2) ? "equal" : "different";
         }},
        {"G(I) numerator", "\"H(G(I),z) = (77 + 15z + 8z^2 + 2z^3 + 2z^4 + z^5)/(1-z)^3\"", "[77,15,8,2,2,1]",
         at(1, "/numerator")},
        {"u*, v* G(I)-regular", "\"So u*, v* is a G(I)-regular sequence\"", "HOLDS", at(4, "/hypotheses/2/status")},
        {"H(G(I/(u,v,w)), z)", "\"H(G(I/(u,v,w)),z) = 77 + 28z\"", "77 + 28z",
         [](const ScriptRun& run) -> std::string {
           const IdealHandle& i = run.env.ideal("I");
           auto cut = i.ring().with_relations(run.env.ideal("J").generators());
           const auto f = assoc_hilbert(IdealHandle(cut, i.generators()), 4).form();
           return f.denom_exp == 0 ? RationalForm{f.numerator, 0}.to_string() : "denominator (1-z)^" +
                                                                                    std::to_string(f.denom_exp);
         }},
        {"a(I) >= 0", "\"Thus a(I) = a_3(I) >= 0\"", "FAILS", at(4, "/hypotheses/3/status")},
        {"f0, f1, f2", "\"f_0(I) = 17, f_1(I) = 34, f_2(I) = 17\"", "[17,34,17]", at(3, "/entries")},
        {"f2 - f1 + f0 - 1", "\"f_2(I) - f_1(I) + f_0(I) - 1 = -1\"", "-1",
         [](const ScriptRun& run) -> std::string {
           const TaskResult& t = run.tasks.at(3);
           if (!t.ok()) return "error " + *t.error_code;
           const auto& v = t.result.at("entries");
           return std::to_string(v[2].get<std::int64_t>() - v[1].get<std::int64_t>() + v[0].get<std::int64_t>() - 1);
         }},
    };
    c.push_back(std::move(e));
  }
  return c;
}

const std::vector<ExampleDef>& corpus() {
  static const std::vector<ExampleDef> c = build_corpus();
  return c;
}

const ExampleDef& find(const std::string& name) {
  for (const ExampleDef& e : corpus()) {
    if (e.info.name == name) return e;
  }
  fail(ErrorCode::kStructural, "unknown example '" + name + "'");
}

}  // namespace

const std::vector<ExampleInfo>& list_examples() {
  static const std::vector<ExampleInfo> infos = [] {
    std::vector<ExampleInfo> out;
    for (const ExampleDef& e : corpus()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const std::string& example_script(const std::string& name) { return find(name).script; }

Report run_example(const std::string& name, const RunOptions& opts, bool allow_long) {
  const ExampleDef& e = find(name);
  if (e.info.long_running && !allow_long) {
    fail(ErrorCode::kHypothesis, "example '" + name + "' is LONG; pass --long to run it");
  }
  RunOptions o = opts;
  o.window_lo = e.window_lo;
  o.window_hi = e.window_hi;
  Report r;
  r.kind = "example";
  r.source = name;
  r.options = o;
  ScriptRun run = run_script(parse_script(e.script), o);
  if (run.env.ring && !run.env.ring->field().is_rational()) {
    r.warnings.push_back("computing over a prime field: answers built from random coefficients are heuristic");
  }
  for (const Check& c : e.checks) {
    AssertionResult a{c.label, c.citation, c.expected, "", false};
    try {
      a.observed = c.observe(run);
    } catch (const Error& err) {
      a.observed = std::string("error ") + to_string(err.code()) + ": " + err.what();
    }
    a.pass = a.observed == a.expected;
    r.assertions.push_back(std::move(a));
  }
  r.tasks = std::move(run.tasks);
  return r;
}

}  // namespace fibrant
