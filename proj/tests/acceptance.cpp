// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fibrant/complexes.hpp"
#include "fibrant/corpus.hpp"
#include "fibrant/errors.hpp"
#include "fibrant/localring.hpp"
#include "fibrant/report.hpp"
#include "monomial_util.hpp"

using namespace fibrant;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Every assertion of an example passes within `limit` seconds.
Outcome example_criterion(const std::string& name, double limit, bool allow_long = false,
                          std::optional<Field> field = std::nullopt) {
  Outcome o;
  RunOptions opts;
  opts.field = field;
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = run_example(name, opts, allow_long);
  const double took = seconds_since(t0);
  std::size_t passed = 0;
  for (const AssertionResult& a : r.assertions) {
    o.require(a.pass, a.label + ": expected " + a.expected + ", observed " + a.observed);
    passed += a.pass ? 1 : 0;
  }
  for (const TaskResult& t : r.tasks) o.require(t.ok(), t.command + ": " + t.error);
  o.require(took < limit, "runtime " + std::to_string(took) + " s over the " + std::to_string(limit) + " s limit");
  std::ostringstream s;
  s << passed << "/" << r.assertions.size() << " assertions, " << took << " s";
  o.detail = o.pass ? s.str() : s.str() + "; " + o.detail;
  return o;
}

// ---- random l = 2 corpus -------------------------------------------------

struct SpreadTwoCase {
  oracle::Gens gens;
  int d = 0;
};

std::vector<SpreadTwoCase> spread_two_corpus(std::size_t want) {
  std::mt19937_64 rng(2024);
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  std::vector<SpreadTwoCase> out;
  std::set<oracle::Gens> seen;
  for (int attempt = 0; attempt < 400 && out.size() < want; ++attempt) {
    const int d = 3 + static_cast<int>(rng() % 4);
    oracle::Gens g = {{d, 0}, {0, d}};
    const int extra = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < extra; ++k) {
      const int a = 1 + static_cast<int>(rng() % (d - 1));
      g.push_back({a, d - a + static_cast<int>(rng() % 2)});
    }
    g = oracle::minimal(g);
    if (!seen.insert(g).second) continue;
    const IdealHandle i = to_ideal(r, g);
    const IdealHandle j = to_ideal(r, {{d, 0}, {0, d}});
    try {
      if (a_invariant_sign(i, j, 2, 1, 6).sign == ASign::kNegative) out.push_back({g, d});
    } catch (const Error&) {
      // no stabilization or no reduction within the bound: not part of the corpus
    }
  }
  return out;
}

Outcome criterion_spread_two() {
  Outcome o;
  const auto corpus = spread_two_corpus(24);
  o.require(corpus.size() >= 20, "only " + std::to_string(corpus.size()) + " ideals with a NEGATIVE sign");
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  std::size_t resolutions = 0;
  for (const SpreadTwoCase& c : corpus) {
    const IdealHandle i = to_ideal(r, c.gens);
    const IdealHandle j = to_ideal(r, {{c.d, 0}, {0, c.d}});
    const HilbertData f = fiber_hilbert(i, 12);
    // f0, f1 from the oracle's mu(I^n) table rather than the library's
    std::vector<std::int64_t> mu;
    for (int n = 0; n <= 12; ++n) mu.push_back(static_cast<std::int64_t>(oracle::power(c.gens, n).size()));
    const std::int64_t f0 = mu[12] - mu[11];
    const std::int64_t f1 = f0 * 13 - mu[12];  // mu(n) = f0 (n + 1) - f1
    o.require(mu == f.values, "fiber values disagree with brute force");
    const auto lib = extract_coefficients(f, CoefficientKind::kFiber).entries;
    o.require(lib == std::vector<std::int64_t>{f0, f1}, "coefficient extraction disagrees");
    o.require(f1 <= f0 - 1, "f1 <= f0 - 1 violated");
    o.require(grade_evidence(i).lower == 2, "grade evidence below 2 in a free ring");
    o.require(f1 == f0 - 1, "f1 = f0 - 1 violated");
    for (std::uint32_t n = 1; n <= 6; ++n) {
      if (!reduces_at(bracket_power(j, n), i.power(n), 1)) continue;
      const ResolutionData res = fiber_resolution(i, j, n, f);
      std::int64_t sum = 0;
      for (auto a : res.alphas) sum += a;
      const auto fn = extract_coefficients(veronese(f, n), CoefficientKind::kFiber).entries;
      o.require(-sum == fn[1] - fn[0] + 1, "-sum alpha != f1(I^n) - f0(I^n) + 1 at n = " + std::to_string(n));
      ++resolutions;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(corpus.size()) + " ideals, " + std::to_string(resolutions) + " resolutions checked";
  }
  return o;
}

// ---- complexes -----------------------------------------------------------

std::size_t oracle_rank(const Matrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).to_rational();
  }
  return oracle::rank(rows);
}

void check_complex(Outcome& o, const FiniteComplex& c, const std::string& where, bool is_c,
                   std::size_t mu_n, std::size_t mu_2n) {
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k) {
    o.require((c.maps[k] * c.maps[k + 1]).is_zero(), where + ": d o d != 0");
  }
  std::vector<std::size_t> ranks = {0};
  for (const Matrix& m : c.maps) ranks.push_back(oracle_rank(m));
  ranks.push_back(0);
  long chi_dims = 0, chi_h = 0;
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t h = c.dims[k] - ranks[k] - ranks[k + 1];
    o.require(h == c.homology[k], where + ": homology differs from the oracle at H_" + std::to_string(k));
    const long sign = k % 2 ? -1 : 1;
    chi_dims += sign * static_cast<long>(c.dims[k]);
    chi_h += sign * static_cast<long>(h);
  }
  o.require(chi_dims == chi_h, where + ": Euler identity");
  o.require(c.homology.front() == 0, where + ": H_0 != 0");
  o.require(c.homology.back() == 0, where + ": top homology != 0");
  o.require(euler_check(c), where + ": euler_check");
  const auto dim0 = static_cast<long>(c.dims[0]);
  if (is_c) {
    o.require(1 - 2 * static_cast<long>(mu_n) + dim0 == -static_cast<long>(c.homology[1]), where + ": r1 identity");
  } else {
    o.require(-1 + 3 * static_cast<long>(mu_n) - 3 * static_cast<long>(mu_2n) + dim0 ==
                  static_cast<long>(c.homology[2]) - static_cast<long>(c.homology[1]),
              where + ": dimension identity for D");
  }
}

Outcome criterion_complexes() {
  Outcome o;
  std::size_t built = 0;
  RunOptions opts;
  for (const ExampleInfo& info : list_examples()) {
    const Script s = parse_script(example_script(info.name));
    const Environment env = build_environment(s, opts);
    for (const Statement& st : s.statements) {
      if (!st.is_task || (st.task.name != "complexC" && st.task.name != "complexD")) continue;
      const IdealHandle& i = env.ideal(st.task.args[0]);
      const IdealHandle& j = env.ideal(st.task.args[1]);
      std::uint32_t n = 1;
      for (const TaskOption& opt : st.task.options) {
        if (opt.key == "n") n = option_uint(opt.value);
      }
      const bool is_c = st.task.name == "complexC";
      const FiniteComplex c = is_c ? build_complex_C(i, j, n) : build_complex_D(i, j, n);
      check_complex(o, c, info.name + " " + st.task.name + " n=" + std::to_string(n), is_c, min_gens(i.power(n)),
                    min_gens(i.power(2 * n)));
      ++built;
    }
  }
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  for (const SpreadTwoCase& c : spread_two_corpus(20)) {
    const IdealHandle i = to_ideal(r, c.gens);
    const IdealHandle j = to_ideal(r, {{c.d, 0}, {0, c.d}});
    for (std::uint32_t n = 1; n <= 3; ++n) {
      check_complex(o, build_complex_C(i, j, n), "random C n=" + std::to_string(n), true, min_gens(i.power(n)), 0);
      ++built;
    }
  }
  const RingPtr r3 = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  const IdealHandle m3 = maximal_ideal(r3);
  for (std::uint32_t n = 1; n <= 2; ++n) {
    check_complex(o, build_complex_D(m3, m3, n), "D(m) n=" + std::to_string(n), false, min_gens(m3.power(n)),
                  min_gens(m3.power(2 * n)));
    ++built;
  }
  if (o.pass) o.detail = std::to_string(built) + " complexes";
  return o;
}

// ---- fast path vs general path -------------------------------------------

std::set<oracle::Exp> as_set(const std::vector<Monomial>& ms) {
  std::set<oracle::Exp> out;
  for (const Monomial& m : ms) {
    const auto e = m.exponents();
    out.insert(oracle::Exp(e.begin(), e.end()));
  }
  return out;
}

std::set<oracle::Exp> gb_leading(const IdealHandle& i, Outcome& o, const std::string& what) {
  std::vector<Monomial> ms;
  for (const Polynomial& g : i.groebner_basis()) {
    o.require(g.is_monomial(), what + ": general path returned a non-monomial basis element");
    ms.push_back(g.leading_monomial());
  }
  return as_set(ms);
}

std::set<oracle::Exp> as_set(const oracle::Gens& g) { return {g.begin(), g.end()}; }

Outcome criterion_fast_paths() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nv = 1 + trial % 3;
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(nv);
    const RingPtr r = AmbientRing::make(names, Field::rationals());
    oracle::Gens a = oracle::random_ideal(rng, nv, 6, 1 + static_cast<int>(rng() % 4));
    const oracle::Gens b = oracle::random_ideal(rng, nv, 6, 1 + static_cast<int>(rng() % 4));
    if (trial % 2 == 0) {  // half of them m-primary so colength is finite
      for (std::size_t v = 0; v < nv; ++v) {
        oracle::Exp e(nv, 0);
        e[v] = 1 + static_cast<int>(rng() % 6);
        a.push_back(e);
      }
      a = oracle::minimal(a);
    }
    const std::string tag = "ideal " + std::to_string(trial);

    const IdealHandle fa = to_ideal(r, a), fb = to_ideal(r, b);
    o.require(fa.monomial_path(), tag + ": fast path not taken");
    const auto fast_prod = as_set(ideal_product(fa, fb).lifted_monomials());
    const auto fast_pow = as_set(ideal_power(fa, 3).lifted_monomials());
    const auto fast_meet = as_set(ideal_intersection(fa, fb).lifted_monomials());
    const auto fast_quot = as_set(ideal_quotient(fa, fb).lifted_monomials());
    const std::size_t fast_mu = min_gens(fa);
    const LengthValue fast_len = colength(fa);

    std::set<oracle::Exp> gen_prod, gen_pow, gen_meet, gen_quot;
    std::size_t gen_mu = 0;
    LengthValue gen_len = LengthValue::infinite();
    {
      GeneralPathScope scope;
      const IdealHandle ga = to_ideal(r, a), gb = to_ideal(r, b);
      o.require(!ga.monomial_path(), tag + ": general path not forced");
      gen_prod = gb_leading(ideal_product(ga, gb), o, tag);
      gen_pow = gb_leading(ideal_power(ga, 3), o, tag);
      gen_meet = gb_leading(ideal_intersection(ga, gb), o, tag);
      gen_quot = gb_leading(ideal_quotient(ga, gb), o, tag);
      gen_mu = min_gens(ga);
      gen_len = colength(ga);
    }
    o.require(fast_prod == gen_prod && fast_prod == as_set(oracle::product(a, b)), tag + ": product");
    o.require(fast_pow == gen_pow && fast_pow == as_set(oracle::power(a, 3)), tag + ": power");
    o.require(fast_meet == gen_meet && fast_meet == as_set(oracle::intersection(a, b)), tag + ": intersection");
    o.require(fast_quot == gen_quot && fast_quot == as_set(oracle::quotient(a, b)), tag + ": quotient");
    o.require(fast_mu == gen_mu && fast_mu == a.size(), tag + ": mu");
    const long expect = oracle::colength(a);
    const LengthValue want = expect < 0 ? LengthValue::infinite() : LengthValue::finite(static_cast<std::size_t>(expect));
    o.require(fast_len == gen_len && fast_len == want, tag + ": colength");
  }
  const double took = seconds_since(t0);
  o.require(took < 120, "runtime " + std::to_string(took) + " s");
  if (o.pass) o.detail = "100 ideals, " + std::to_string(took) + " s";
  return o;
}

// ---- determinism ---------------------------------------------------------

std::string corpus_json() {
  RunOptions opts;
  opts.seed = 7;
  std::string all;
  for (const ExampleInfo& info : list_examples()) {
    if (info.long_running) continue;
    all += report_json(run_example(info.name, opts, false)).dump(2);
  }
  const Script s = parse_script(
      "ring A = QQ[x,y,z];\n"
      "ideal I = x^3, x*y^2, y^3, z^2;\n"
      "task min_reduction I;\n"
      "task min_reduction I seed=11;\n"
      "task fiber_series I;\n");
  all += report_json(make_script_report(s, "seeded", opts)).dump(2);
  return all;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

Outcome criterion_determinism(const std::string& tool) {
  Outcome o;
  const std::string first = corpus_json();
  o.require(first == corpus_json(), "in-process runs differ");
  std::size_t processes = 0;
  if (!tool.empty()) {
    for (const ExampleInfo& info : list_examples()) {
      if (info.long_running) continue;
      const std::string cmd = "'" + tool + "' example " + info.name + " --json --seed 7";
      const std::string a = capture(cmd), b = capture(cmd);
      o.require(!a.empty() && a == b, "separate processes differ on " + info.name);
      ++processes;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(first.size()) + " bytes identical in process";
    if (processes) o.detail += ", " + std::to_string(processes) + " examples identical across processes";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"grade-one maximal ideal: fiber series, f = (1, -1), filter-regular verdicts",
       [] { return example_criterion("grade-one-maximal", 5); }},
      {"Marley's ideal: fiber numerator, f0 = 7, f1 = 6, e2 = 0", [] { return example_criterion("marley", 60); }},
      {"semigroup model: product, intersection and membership facts, both fiber series",
       [] { return example_criterion("semigroup", 1); }},
      {"grade-deficit pattern: fiber series, f = (1, -2, -3), intersection condition, failed conclusion",
       [] { return example_criterion("grade-deficit", 30); }},
      {"intersection-failure pattern: red = 2, numerator, f = (4, 3, -1), Ratliff-Rush closures",
       [] { return example_criterion("intersection-failure", 60); }},
      {"nonnegative-a pattern (LONG): reduction numbers, G-series, f = (17, 34, 17)",
       [] { return example_criterion("nonnegative-a", 600, true); }},
      {"spread-two property suite on random monomial ideals", criterion_spread_two},
      {"complex infrastructure: d o d = 0, Euler, H0 = 0, top H = 0, dimension identities", criterion_complexes},
      {"monomial fast paths agree with the general path and the oracle", criterion_fast_paths},
      {"determinism of corpus JSON reports", [&tool] { return criterion_determinism(tool); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " ["
              << o.detail << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
