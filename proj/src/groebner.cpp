#include "fibrant/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "fibrant/errors.hpp"

namespace fibrant {

GroebnerBudget GroebnerBudget::from_environment() {
  GroebnerBudget budget;
  if (const char* env = std::getenv("FIBRANT_MAX_PAIRS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) budget.max_pairs = static_cast<std::size_t>(v);
  }
  return budget;
}

namespace {

bool sorted_desc(const std::vector<Polynomial>& v, const TermOrder& ord) {
  return std::is_sorted(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_compare(a.leading_monomial(), b.leading_monomial(), ord) ==
           std::strong_ordering::greater;
  });
}

struct Reducers {
  std::vector<const Polynomial*> polys;
  std::vector<std::uint32_t> masks;

  void add(const Polynomial* p) {
    polys.push_back(p);
    masks.push_back(p->leading_monomial().support());
  }

  const Polynomial* find(const Monomial& m) const {
    const std::uint32_t mask = m.support();
    const Polynomial* best = nullptr;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if ((masks[k] & ~mask) != 0) continue;
      if (!polys[k]->leading_monomial().divides(m)) continue;
      if (best == nullptr || polys[k]->size() < best->size()) best = polys[k];
    }
    return best;
  }
};

Polynomial reduce_fully(const Polynomial& f, const Reducers& reducers) {
  const RingSignature& sig = f.signature();
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    const Polynomial* g = reducers.find(lt.mono);
    if (g == nullptr) {
      remainder.push_back(lt);
      Polynomial tail = Polynomial::term(sig, lt.coeff, lt.mono);
      rest -= tail;
      continue;
    }
    Monomial shift = *monomial_divrem(lt.mono, g->leading_monomial());
    Scalar c = lt.coeff / g->leading_coefficient();
    rest.subtract_scaled(c, shift, *g);
  }
  return Polynomial::from_terms(sig, std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const RingSignature& sig, const GroebnerBudget& budget) : sig_(sig), budget_(budget) {}

  std::vector<Polynomial> run(std::vector<Polynomial> gens) {
    // Lowest leading monomials first keeps early reductions short.
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      return less(a.leading_monomial(), b.leading_monomial());
    });
    for (Polynomial& g : gens) {
      Polynomial h = reduce_fully(g, active_reducers()).monic();
      if (!h.is_zero()) add(std::move(h));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      Pair p = std::move(pairs_.back());
      pairs_.pop_back();
      if (++processed > budget_.max_pairs) {
        fail(ErrorCode::kResourceLimit,
             "Groebner pair budget exceeded (" + std::to_string(budget_.max_pairs) + ")");
      }
      Polynomial s = spoly(p);
      Polynomial h = reduce_fully(s, active_reducers()).monic();
      if (!h.is_zero()) add(std::move(h));
    }
    return finish();
  }

 private:
  bool less(const Monomial& a, const Monomial& b) const {
    return monomial_compare(a, b, sig_.order) == std::strong_ordering::less;
  }

  // Normal selection: smallest lcm degree first, then smallest lcm.
  bool pair_before(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = monomial_compare(a.lcm, b.lcm, sig_.order);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Reducers active_reducers() const {
    Reducers r;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) r.add(&polys_[k]);
    }
    return r;
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    Monomial uf = *monomial_divrem(p.lcm, f.leading_monomial());
    Monomial ug = *monomial_divrem(p.lcm, g.leading_monomial());
    Polynomial s = f.times_monomial(uf);
    s.subtract_scaled(Scalar::one(sig_.field), ug, g);
    return s;
  }

  void add(Polynomial h) {
    if (polys_.size() + 1 > budget_.max_generators) {
      fail(ErrorCode::kResourceLimit, "Groebner generator budget exceeded (" +
                                          std::to_string(budget_.max_generators) + ")");
    }
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller update: chain criterion on new pairs, product criterion,
    // then pruning of old pairs made redundant by the new leading monomial.
    struct Candidate {
      Pair pair;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      Monomial l = monomial_lcm(lg, lh);
      fresh.push_back({Pair{g, hi, l}, l.degree() == lg.degree() + lh.degree()});
    }
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Candidate& c = fresh[a];
      bool redundant = false;
      if (!c.coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !redundant; ++b) {
          redundant = fresh[b].pair.lcm.divides(c.pair.lcm);
        }
        for (std::size_t b = 0; b < kept.size() && !redundant; ++b) {
          redundant = kept[b].pair.lcm.divides(c.pair.lcm);
        }
      }
      if (!redundant) kept.push_back(c);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(monomial_lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(monomial_lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (Candidate& c : kept) {
      if (!c.coprime) next.push_back(std::move(c.pair));
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
    std::sort(next.begin(), next.end(),
              [this](const Pair& a, const Pair& b) { return pair_before(b, a); });
    pairs_ = std::move(next);
  }

  std::vector<Polynomial> finish() const {
    std::vector<const Polynomial*> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(&polys_[k]);
    }
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Reducers others;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.add(basis[l]);
      }
      const Term& lt = basis[k]->leading_term();
      Polynomial tail = *basis[k] - Polynomial::term(sig_, lt.coeff, lt.mono);
      Polynomial reduced = reduce_fully(tail, others) + Polynomial::term(sig_, lt.coeff, lt.mono);
      out.push_back(reduced.monic());
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      return less(b.leading_monomial(), a.leading_monomial());
    });
    return out;
  }

  RingSignature sig_;
  GroebnerBudget budget_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens) {
  return reduced_groebner_basis(std::move(gens), GroebnerBudget::from_environment());
}

std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens,
                                               const GroebnerBudget& budget) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) return {};
  const RingSignature sig = gens.front().signature();
  for (const Polynomial& g : gens) {
    if (!(g.signature() == sig)) fail(ErrorCode::kStructural, "generators from different rings");
  }
  const bool all_monomial =
      std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
  if (all_monomial && !general_path_forced()) {
    std::vector<Monomial> monos;
    monos.reserve(gens.size());
    for (const Polynomial& g : gens) monos.push_back(g.leading_monomial());
    std::vector<Polynomial> out;
    for (const Monomial& m : monomial_ideal::minimalize(std::move(monos))) {
      out.push_back(Polynomial::monomial(sig, m));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return monomial_compare(a.leading_monomial(), b.leading_monomial(), sig.order) ==
             std::strong_ordering::greater;
    });
    return out;
  }
  std::vector<Polynomial> out = Buchberger(sig, budget).run(std::move(gens));
  if (!sorted_desc(out, sig.order)) {
    fail(ErrorCode::kInternalInconsistency, "Groebner basis output not sorted");
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Reducers reducers;
  for (const Polynomial& g : basis) {
    if (!g.is_zero()) reducers.add(&g);
  }
  return reduce_fully(f, reducers);
}

// ---------------------------------------------------------------------------

namespace monomial_ideal {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(a, b);
  });
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) { return lex_less(a, b); });
  return kept;
}

bool contains(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool is_subset(std::span<const Monomial> a, std::span<const Monomial> b) {
  return std::all_of(a.begin(), a.end(), [&](const Monomial& m) { return contains(b, m); });
}

std::vector<Monomial> sum(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return minimalize(std::move(all));
}

std::vector<Monomial> product(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const Monomial& x : a) {
    for (const Monomial& y : b) all.push_back(x * y);
  }
  return minimalize(std::move(all));
}

std::vector<Monomial> power(std::span<const Monomial> a, std::uint32_t n, std::size_t nvars) {
  std::vector<Monomial> result{Monomial(nvars)};
  std::vector<Monomial> base(a.begin(), a.end());
  while (n > 0) {
    if (n & 1U) result = product(result, base);
    n >>= 1U;
    if (n > 0) base = product(base, base);
  }
  return result;
}

std::vector<Monomial> intersection(std::span<const Monomial> a, std::span<const Monomial> b) {
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const Monomial& x : a) {
    for (const Monomial& y : b) all.push_back(monomial_lcm(x, y));
  }
  return minimalize(std::move(all));
}

std::vector<Monomial> quotient(std::span<const Monomial> a, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(a.size());
  for (const Monomial& x : a) out.push_back(monomial_colon(x, m));
  return minimalize(std::move(out));
}

std::vector<Monomial> quotient(std::span<const Monomial> a, std::span<const Monomial> b) {
  if (b.empty()) {
    // (I : 0) is the unit ideal.
    std::size_t n = a.empty() ? 0 : a.front().nvars();
    return {Monomial(n)};
  }
  std::vector<Monomial> acc = quotient(a, b.front());
  for (std::size_t k = 1; k < b.size(); ++k) acc = intersection(acc, quotient(a, b[k]));
  return acc;
}

namespace {

// Exponent bound per variable from pure-power generators; nullopt if a
// variable has none (then the quotient is infinite-dimensional).
std::optional<std::vector<std::uint32_t>> box(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<std::uint32_t> bound(nvars, 0);
  for (const Monomial& g : gens) {
    if (g.is_one()) return std::vector<std::uint32_t>(nvars, 0);
    std::uint32_t s = g.support();
    if ((s & (s - 1)) == 0) {
      std::size_t v = static_cast<std::size_t>(__builtin_ctz(s));
      if (bound[v] == 0 || g[v] < bound[v]) bound[v] = g[v];
    }
  }
  for (std::uint32_t b : bound) {
    if (b == 0) return std::nullopt;
  }
  return bound;
}

void walk(std::span<const Monomial> gens, const std::vector<std::uint32_t>& bound,
          std::vector<std::uint32_t>& exps, std::size_t v,
          const std::function<void(const Monomial&)>& visit) {
  const std::size_t n = exps.size();
  for (std::uint32_t k = 0; k < bound[v]; ++k) {
    exps[v] = k;
    Monomial m = Monomial::from_exponents(exps);
    if (contains(gens, m)) break;
    if (v + 1 == n) {
      visit(m);
    } else {
      walk(gens, bound, exps, v + 1, visit);
    }
  }
  exps[v] = 0;
}

}  // namespace

std::optional<std::size_t> count_standard(std::span<const Monomial> gens, std::size_t nvars) {
  if (contains(gens, Monomial(nvars))) return 0;
  if (nvars == 0) return 1;
  auto bound = box(gens, nvars);
  if (!bound) return std::nullopt;
  std::size_t count = 0;
  std::vector<std::uint32_t> exps(nvars, 0);
  walk(gens, *bound, exps, 0, [&](const Monomial&) { ++count; });
  return count;
}

std::vector<Monomial> standard_monomials(std::span<const Monomial> gens, std::size_t nvars) {
  std::vector<Monomial> out;
  if (contains(gens, Monomial(nvars))) return out;
  if (nvars == 0) return {Monomial(0)};
  auto bound = box(gens, nvars);
  if (!bound) fail(ErrorCode::kStructural, "infinitely many standard monomials");
  std::vector<std::uint32_t> exps(nvars, 0);
  walk(gens, *bound, exps, 0, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

}  // namespace monomial_ideal

namespace {
thread_local bool forced_general = false;
}  // namespace

GeneralPathScope::GeneralPathScope() : previous_(forced_general) { forced_general = true; }
GeneralPathScope::~GeneralPathScope() { forced_general = previous_; }
bool general_path_forced() { return forced_general; }

}  // namespace fibrant
