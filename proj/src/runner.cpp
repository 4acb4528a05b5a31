#include "fibrant/runner.hpp"

#include <chrono>
#include <functional>

#include "fibrant/complexes.hpp"
#include "fibrant/errors.hpp"
#include "fibrant/invariants.hpp"
#include "fibrant/reductions.hpp"

namespace fibrant {

using json = nlohmann::ordered_json;

const IdealHandle& Environment::ideal(const std::string& name) const { return ideals.at(name); }
const SemigroupIdeal& Environment::sg_ideal(const std::string& name) const { return sg_ideals.at(name); }
const Polynomial& Environment::elem(const std::string& name) const { return elems.at(name); }

namespace {

Field declared_field(const std::string& f) {
  if (f == "QQ") return Field::rationals();
  return Field::prime(static_cast<std::uint32_t>(std::stoul(f.substr(3, f.size() - 4))));
}

std::string task_line(const Task& t) {
  Script s;
  Statement st;
  st.is_task = true;
  st.task = t;
  s.statements.push_back(st);
  std::string line = pretty_print(s);
  line.pop_back();
  return line;
}

struct Ctx {
  const Task& task;
  const Environment& env;
  const RunOptions& opts;
  TaskResult& out;

  std::optional<std::string> opt(const std::string& key) const {
    for (const TaskOption& o : task.options) {
      if (o.key == key) return o.value;
    }
    return std::nullopt;
  }
  std::uint32_t uint_opt(const std::string& key, std::uint32_t fallback) const {
    auto v = opt(key);
    return v ? option_uint(*v) : fallback;
  }
  std::pair<std::uint32_t, std::uint32_t> window(const std::string& key = "window") const {
    auto v = opt(key);
    return v ? option_range(*v) : std::make_pair(opts.window_lo, opts.window_hi);
  }
  std::vector<Polynomial> elem_list(const std::string& key) const {
    std::vector<Polynomial> out;
    if (auto v = opt(key)) {
      for (const std::string& name : option_list(*v)) out.push_back(env.elem(name));
    }
    return out;
  }
  bool semigroup() const { return env.semigroup != nullptr; }
  const IdealHandle& ideal(std::size_t k) const { return env.ideal(task.args[k]); }
  const Polynomial& elem(std::size_t k) const { return env.elem(task.args[k]); }
  std::string fmt(const Polynomial& f) const { return env.ring->format(f); }
  void say(std::string line) { out.text.push_back(std::move(line)); }
};

json ints(const std::vector<std::int64_t>& v) { return json(v); }

json hilbert_json(const HilbertData& h) {
  json j;
  j["values"] = ints(h.values);
  j["numerator"] = ints(h.form().numerator);
  j["denom_exp"] = h.form().denom_exp;
  j["series"] = h.form().to_string();
  if (h.stabilization_degree) j["stabilization_degree"] = *h.stabilization_degree;
  return j;
}

json verdict_json(const VerdictReport& r) {
  json j;
  j["status"] = to_string(r.status);
  j["window"] = r.window;
  json ev = json::array();
  for (const Evidence& e : r.evidence) ev.push_back({{"point", e.point}, {"pass", e.pass}, {"detail", e.detail}});
  j["evidence"] = ev;
  if (r.witness) j["witness"] = *r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

void say_verdict(Ctx& c, const std::string& what, const VerdictReport& r) {
  c.say(what + ": " + to_string(r.status) + " on " + r.window);
  if (r.witness) c.say("  witness: " + *r.witness);
  if (!r.note.empty()) c.say("  note: " + r.note);
}

json complex_json(const FiniteComplex& fc) {
  json j;
  j["labels"] = fc.labels;
  j["dims"] = fc.dims;
  j["homology"] = fc.homology;
  j["euler"] = euler_check(fc);
  j["notes"] = fc.notes;
  return j;
}

json resolution_json(const ResolutionData& r) {
  json j;
  j["n"] = r.n;
  j["beta0"] = r.beta0;
  j["beta1"] = r.beta1;
  j["alphas"] = r.alphas;
  j["kernel_present"] = r.kernel_present;
  j["s_dims"] = r.s_dims;
  return j;
}

json theorem_json(const TheoremReport& t) {
  json j;
  j["theorem"] = t.theorem;
  json hyps = json::array();
  for (const HypothesisRow& h : t.hypotheses) {
    hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"window", h.window}, {"detail", h.detail}});
  }
  j["hypotheses"] = hyps;
  j["conclusion"] = {{"statement", t.conclusion.statement},
                     {"lhs", t.conclusion.lhs},
                     {"rhs", t.conclusion.rhs},
                     {"holds", t.conclusion.holds}};
  j["coefficients"] = t.coefficients;
  json res = json::array();
  for (const ResolutionData& r : t.resolutions) res.push_back(resolution_json(r));
  j["resolution"] = res;
  j["notes"] = t.notes;
  return j;
}

void say_theorem(Ctx& c, const TheoremReport& t) {
  c.say(t.theorem);
  std::string coeffs;
  for (std::size_t k = 0; k < t.coefficients.size(); ++k) {
    coeffs += (k ? ", " : "") + std::string("f") + std::to_string(k) + " = " + std::to_string(t.coefficients[k]);
  }
  c.say("  coefficients: " + coeffs);
  for (const HypothesisRow& h : t.hypotheses) {
    c.say("  [" + std::string(to_string(h.status)) + "] " + h.name + (h.window.empty() ? "" : " (" + h.window + ")"));
    if (!h.detail.empty()) c.say("      " + h.detail);
  }
  c.say("  conclusion " + t.conclusion.statement + ": " + std::to_string(t.conclusion.lhs) + " vs " +
        std::to_string(t.conclusion.rhs) + " -> " + (t.conclusion.holds ? "true" : "false"));
  for (const std::string& n : t.notes) c.say("  " + n);
}

HilbertData series_of(Ctx& c, const char* kind, std::uint32_t nmax) {
  const std::string k = kind;
  if (c.semigroup()) return fiber_hilbert(c.env.sg_ideal(c.task.args[0]), nmax);
  if (k == "fiber") return fiber_hilbert(c.ideal(0), nmax);
  if (k == "assoc") return assoc_hilbert(c.ideal(0), nmax);
  return hilbert_samuel(c.ideal(0), nmax);
}

CheckOptions check_options(const Ctx& c) {
  CheckOptions o;
  o.nmax = c.uint_opt("nmax", c.opts.nmax);
  std::tie(o.window_lo, o.window_hi) = c.window();
  o.red_bound = c.opts.red_bound;
  o.depth_sequence = c.elem_list("depth");
  o.grade_candidates = c.elem_list("grade");
  return o;
}

void run_task(Ctx& c) {
  const std::string& name = c.task.name;
  json& r = c.out.result;
  if (name == "fiber_series" || name == "assoc_series" || name == "hs_series") {
    const char* kind = name == "fiber_series" ? "fiber" : name == "assoc_series" ? "assoc" : "hs";
    HilbertData h = series_of(c, kind, c.uint_opt("nmax", c.opts.nmax));
    r = hilbert_json(h);
    c.say(std::string(kind == std::string("fiber") ? "H(F(I), z)" : kind == std::string("assoc") ? "H(G(I), z)"
                                                                                                   : "HS(I, z)") +
          " = " + h.form().to_string());
  } else if (name == "coeffs") {
    const bool hs = c.opt("kind").value_or("fiber") == "hs";
    if (hs && c.semigroup()) fail(ErrorCode::kStructural, "Hilbert-Samuel coefficients need a polynomial ring");
    HilbertData h = series_of(c, hs ? "hs" : "fiber", c.uint_opt("nmax", c.opts.nmax));
    CoefficientVector v = extract_coefficients(h, hs ? CoefficientKind::kHilbertSamuel : CoefficientKind::kFiber);
    r["kind"] = hs ? "hs" : "fiber";
    r["entries"] = v.entries;
    std::string line;
    for (std::size_t k = 0; k < v.entries.size(); ++k) {
      line += (k ? ", " : "") + std::string(hs ? "e" : "f") + std::to_string(k) + " = " + std::to_string(v.entries[k]);
    }
    c.say(line);
  } else if (name == "spread") {
    const std::uint32_t l = analytic_spread(c.ideal(0), c.uint_opt("nmax", c.opts.nmax));
    r["spread"] = l;
    c.say("l(I) = " + std::to_string(l));
  } else if (name == "reduction") {
    ReductionRecord rec = reduction_number(c.ideal(0), c.ideal(1), c.uint_opt("bound", c.opts.red_bound));
    r["red"] = rec.red;
    r["verified_through"] = rec.verified_through;
    c.say("red_J(I) = " + std::to_string(rec.red) + " (J I^n = I^{n+1} confirmed through n = " +
          std::to_string(rec.verified_through) + ")");
  } else if (name == "min_reduction") {
    ReductionRecord rec = find_minimal_reduction(c.ideal(0), c.uint_opt("seed", static_cast<std::uint32_t>(c.opts.seed)),
                                                 c.uint_opt("trials", c.opts.trials),
                                                 c.uint_opt("bound", c.opts.red_bound));
    r["j"] = rec.j.to_string();
    r["red"] = rec.red;
    r["trials"] = rec.trials;
    c.say("J = " + rec.j.to_string() + ", red_J(I) = " + std::to_string(rec.red) + " after " +
          std::to_string(rec.trials) + " trial(s)");
  } else if (name == "rr_closure") {
    RatliffRush rr = ratliff_rush(c.ideal(0), c.uint_opt("bound", c.opts.red_bound));
    const bool same = ideal_equals(rr.closure, c.ideal(0));
    r["closure"] = rr.closure.to_string();
    r["stabilized_at"] = rr.stabilized_at;
    r["equals_input"] = same;
    c.say("Ratliff-Rush closure " + rr.closure.to_string() + (same ? " equals the input" : " strictly contains the input"));
  } else if (name == "vv") {
    auto [lo, hi] = c.window();
    VerdictReport v = c.semigroup() ? valabrega_valla(c.env.sg_ideal(c.task.args[0]), c.env.sg_ideal(c.task.args[1]), lo, hi)
                                    : valabrega_valla(c.ideal(0), c.ideal(1), lo, hi);
    r = verdict_json(v);
    say_verdict(c, "I^n meets J in J I^{n-1}", v);
  } else if (name == "v2inf") {
    auto [lo, hi] = c.window();
    VerdictReport v = v2_infinity(c.ideal(0), c.ideal(1), lo, hi);
    r = verdict_json(v);
    say_verdict(c, "I^{2n} meets J^[n] in J^[n] I^n", v);
  } else if (name == "superficial" || name == "filter_regular") {
    auto [lo, hi] = c.window();
    VerdictReport v = name == "superficial" ? is_superficial(c.elem(0), c.ideal(1), lo, hi)
                                            : is_filter_regular(c.elem(0), c.ideal(1), lo, hi);
    r = verdict_json(v);
    say_verdict(c, c.fmt(c.elem(0)) + (name == "superficial" ? " superficial" : " filter-regular"), v);
  } else if (name == "rees_superficial") {
    auto [lo, hi] = c.opt("r") ? option_range(*c.opt("r")) : std::make_pair(1U, 3U);
    VerdictReport v = is_rees_superficial(c.elem(0), c.ideal(1), lo, hi, c.uint_opt("s", 2));
    r = verdict_json(v);
    say_verdict(c, c.fmt(c.elem(0)) + " Rees-superficial", v);
  } else if (name == "complexC" || name == "complexD") {
    const std::uint32_t n = c.uint_opt("n", 1);
    FiniteComplex fc = name == "complexC" ? build_complex_C(c.ideal(0), c.ideal(1), n)
                                          : build_complex_D(c.ideal(0), c.ideal(1), n);
    r = complex_json(fc);
    r["n"] = n;
    std::string dims;
    std::string hom;
    for (std::size_t k = fc.dims.size(); k-- > 0;) {
      dims += std::to_string(fc.dims[k]) + (k ? " -> " : "");
      hom += "H" + std::to_string(k) + " = " + std::to_string(fc.homology[k]) + (k ? ", " : "");
    }
    c.say(std::string(name == "complexC" ? "C." : "D.") + " at n = " + std::to_string(n) + ": 0 -> " + dims + " -> 0");
    c.say("  " + hom + ", d o d = 0 and Euler identity verified");
    for (const std::string& note : fc.notes) c.say("  " + note);
  } else if (name == "resolution") {
    const std::uint32_t n = c.uint_opt("n", 1);
    HilbertData f = fiber_hilbert(c.ideal(0), c.uint_opt("nmax", c.opts.nmax));
    ResolutionData res = fiber_resolution(c.ideal(0), c.ideal(1), n, f);
    r = resolution_json(res);
    std::string alphas;
    for (std::uint32_t a : res.alphas) alphas += (alphas.empty() ? "" : ", ") + std::to_string(a);
    c.say("F(I^n) over F(J^[n]) at n = " + std::to_string(n) + ": beta0 = " + std::to_string(res.beta0) +
          ", beta1 = " + std::to_string(res.beta1) + ", alphas = {" + alphas + "}");
  } else if (name == "thm_l2" || name == "thm_l3") {
    CheckOptions o = check_options(c);
    TheoremReport t = name == "thm_l2" ? check_theorem_l2(c.ideal(0), c.ideal(1), o)
                                       : check_theorem_l3(c.ideal(0), c.ideal(1), o);
    r = theorem_json(t);
    say_theorem(c, t);
  } else if (name == "higher") {
    CheckOptions o = check_options(c);
    TheoremReport t = check_higher_spread(c.ideal(0), c.ideal(1), c.elem_list("xs"), o);
    r = theorem_json(t);
    say_theorem(c, t);
  } else {
    fail(ErrorCode::kStructural, "task '" + name + "' has no runner");
  }
}

}  // namespace

Environment build_environment(const Script& s, const RunOptions& opts) {
  Environment env;
  for (const Statement& st : s.statements) {
    if (st.is_task) continue;
    const Decl& d = st.decl;
    switch (d.kind) {
      case DeclKind::kRing:
        if (d.ring.semigroup) {
          env.semigroup = std::make_shared<NumericalSemigroup>(d.ring.generators);
        } else {
          env.ring = AmbientRing::make(d.ring.variables, opts.field.value_or(declared_field(d.ring.field)),
                                       d.ring.relations);
        }
        break;
      case DeclKind::kIdeal:
        if (env.semigroup) {
          std::vector<std::uint32_t> e;
          for (const std::string& x : d.items) e.push_back(static_cast<std::uint32_t>(std::stoul(x)));
          env.sg_ideals.emplace(d.name, SemigroupIdeal(env.semigroup, e));
        } else {
          std::vector<Polynomial> g;
          for (const std::string& x : d.items) g.push_back(env.ring->parse(x));
          env.ideals.emplace(d.name, IdealHandle(env.ring, g));
        }
        break;
      case DeclKind::kElem:
        if (env.semigroup) {
          env.sg_elems.emplace(d.name, std::stol(d.items.front()));
        } else {
          env.elems.emplace(d.name, env.ring->reduce(env.ring->parse(d.items.front())));
        }
        break;
    }
  }
  return env;
}

ScriptRun run_script(const Script& s, const RunOptions& opts) {
  ScriptRun run;
  run.env = build_environment(s, opts);
  bool aborted = false;
  for (const Statement& st : s.statements) {
    if (!st.is_task) continue;
    TaskResult tr;
    tr.command = task_line(st.task);
    if (aborted) {
      tr.error_code = to_string(ErrorCode::kResourceLimit);
      tr.error = "skipped after an earlier resource error";
      run.tasks.push_back(std::move(tr));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Ctx c{st.task, run.env, opts, tr};
    try {
      run_task(c);
    } catch (const Error& e) {
      tr.result = json::object();
      tr.error_code = to_string(e.code());
      tr.error = e.what();
      if (e.code() == ErrorCode::kResourceLimit) aborted = true;
    }
    tr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    run.tasks.push_back(std::move(tr));
  }
  return run;
}

}  // namespace fibrant
