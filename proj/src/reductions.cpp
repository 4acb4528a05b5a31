#include "fibrant/reductions.hpp"

#include <algorithm>
#include <random>

#include "fibrant/errors.hpp"
#include "fibrant/invariants.hpp"
#include "fibrant/linalg.hpp"
#include "fibrant/localring.hpp"

namespace fibrant {

namespace {

constexpr std::size_t kTail = 3;

std::string range(const char* var, std::uint32_t lo, std::uint32_t hi) {
  return std::string(var) + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::string at(const char* var, std::uint32_t n) { return std::string(var) + "=" + std::to_string(n); }

IdealHandle principal(const RingPtr& ring, const Polynomial& x) { return IdealHandle(ring, {x}); }

// Every window point must pass.
void settle_exact(VerdictReport& r) {
  bool all = std::all_of(r.evidence.begin(), r.evidence.end(), [](const Evidence& e) { return e.pass; });
  r.status = all ? Verdict::kHolds : Verdict::kFails;
}

// "For all n >> 0": a passing tail of at least three points holds; a failure
// at the last point fails; anything else stays open.
void settle_asymptotic(VerdictReport& r) {
  std::size_t tail = 0;
  while (tail < r.evidence.size() && r.evidence[r.evidence.size() - 1 - tail].pass) ++tail;
  if (tail == r.evidence.size() && tail > 0) {
    r.status = Verdict::kHolds;
  } else if (tail >= kTail) {
    r.status = Verdict::kHolds;
    r.note = "earlier window points fail; the last " + std::to_string(tail) + " pass";
  } else if (!r.evidence.empty() && !r.evidence.back().pass) {
    r.status = Verdict::kFails;
  } else {
    r.status = Verdict::kInconclusive;
    r.note = "passing tail shorter than " + std::to_string(kTail) + " points";
  }
}

// Records a failure witness (the first one seen) and returns the evidence detail.
std::string record(VerdictReport& r, const std::optional<Polynomial>& w, const AmbientRing& ring,
                   const std::string& what) {
  if (!w) return "equal";
  std::string s = ring.format(*w) + " " + what;
  if (!r.witness) r.witness = s;
  return s;
}

bool in_max_times(const Polynomial& x, const IdealHandle& i) { return membership(x, maximal_times(i)); }

bool check_in_fiber(VerdictReport& r, const Polynomial& x, const IdealHandle& i) {
  const AmbientRing& ring = i.ring();
  if (!membership(x, i)) {
    r.status = Verdict::kFails;
    r.witness = ring.format(x) + " lies outside " + i.to_string();
    r.note = "precondition x in I fails";
    return false;
  }
  if (in_max_times(x, i)) {
    r.status = Verdict::kFails;
    r.witness = ring.format(x) + " lies in m I";
    r.note = "precondition x not in m I fails";
    return false;
  }
  return true;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "HOLDS";
    case Verdict::kFails: return "FAILS";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

const char* to_string(ASign s) {
  switch (s) {
    case ASign::kNegative: return "NEGATIVE";
    case ASign::kNonnegative: return "NONNEGATIVE";
    case ASign::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

bool reduces_at(const IdealHandle& j, const IdealHandle& i, std::uint32_t n) {
  const IdealHandle base = i.power(n);
  const FiberSpace target(i.power(n + 1));
  std::vector<Polynomial> products;
  for (const Polynomial& a : j.generators()) {
    for (const Polynomial& g : base.generators()) products.push_back(a * g);
  }
  return target.image_rank(products) == target.dimension();
}

ReductionRecord reduction_number(const IdealHandle& j, const IdealHandle& i, std::uint32_t bound) {
  if (auto w = containment_witness(i, j)) {
    fail(ErrorCode::kContainment, "reduction_number: " + i.ring().format(*w) + " lies outside " + i.to_string());
  }
  for (std::uint32_t n = 0; n <= bound; ++n) {
    if (!reduces_at(j, i, n)) continue;
    for (std::uint32_t m = n + 1; m <= n + 2; ++m) {
      if (!reduces_at(j, i, m)) {
        fail(ErrorCode::kInternalInconsistency, "J I^n = I^{n+1} did not persist at n = " + std::to_string(m));
      }
    }
    return ReductionRecord{j, n, n + 2, 1};
  }
  fail(ErrorCode::kNotAReductionWithinBound,
       j.to_string() + " is not a reduction of " + i.to_string() + " with reduction number <= " +
           std::to_string(bound));
}

ReductionRecord find_minimal_reduction(const IdealHandle& i, std::uint64_t seed, std::uint32_t trials,
                                       std::uint32_t bound, std::optional<std::uint32_t> spread) {
  const std::uint32_t l = spread ? *spread : analytic_spread(i);
  const AmbientRing& ring = i.ring();
  std::mt19937_64 rng(seed);
  auto coefficient = [&] {
    std::uint64_t raw = rng();
    long v = static_cast<long>(raw % 5) + 1;
    return Scalar::from_int((raw / 5) % 2 == 0 ? v : -v, ring.field());
  };
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::vector<Polynomial> gens;
    for (std::uint32_t k = 0; k < l; ++k) {
      Polynomial f = ring.zero();
      for (const Polynomial& g : i.generators()) f += g * Polynomial::constant(ring.signature(), coefficient());
      gens.push_back(std::move(f));
    }
    try {
      ReductionRecord rec = reduction_number(IdealHandle(i.ring_ptr(), std::move(gens)), i, bound);
      rec.trials = t + 1;
      return rec;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotAReductionWithinBound) throw;
    }
  }
  fail(ErrorCode::kSearchExhausted,
       "no reduction of " + i.to_string() + " found in " + std::to_string(trials) + " random trials");
}

AsymptoticReduction asymptotic_reduction_number(const IdealHandle& i, const IdealHandle& j, std::uint32_t lo,
                                                std::uint32_t hi, std::uint32_t bound) {
  AsymptoticReduction out;
  out.report.window = range("n", lo, hi);
  for (std::uint32_t n = std::max(lo, 1U); n <= hi; ++n) {
    std::uint32_t r = reduction_number(bracket_power(j, n), i.power(n), bound).red;
    out.per_n.emplace_back(n, r);
    out.report.evidence.push_back({at("n", n), true, "red_{J^[n]}(I^n) = " + std::to_string(r)});
  }
  const auto& v = out.per_n;
  if (v.size() >= kTail && std::all_of(v.end() - kTail, v.end(), [&](const auto& p) { return p.second == v.back().second; })) {
    out.value = v.back().second;
    out.report.status = Verdict::kHolds;
  } else {
    out.report.status = Verdict::kInconclusive;
    out.report.note = "reduction numbers not constant on the last " + std::to_string(kTail) + " window points";
  }
  return out;
}

ASignResult a_invariant_sign(const IdealHandle& i, const IdealHandle& j, std::uint32_t spread, std::uint32_t lo,
                             std::uint32_t hi, std::uint32_t bound) {
  ASignResult out;
  out.spread = spread;
  AsymptoticReduction a = asymptotic_reduction_number(i, j, lo, hi, bound);
  out.report = a.report;
  out.asymptotic_red = a.value;
  if (!a.value) return out;
  if (spread >= 1 && *a.value == spread - 1) {
    out.sign = ASign::kNegative;
  } else if (*a.value == spread) {
    out.sign = ASign::kNonnegative;
  } else {
    out.report.status = Verdict::kInconclusive;
    out.report.note = "stabilized value " + std::to_string(*a.value) + " is neither l - 1 nor l; window is pre-asymptotic";
  }
  return out;
}

std::uint32_t decisive_power(std::uint32_t red_j, std::uint32_t dim, std::uint32_t depth_lower) {
  long worst = -1;
  for (std::uint32_t i = depth_lower; i <= dim; ++i) {
    long b = static_cast<long>(red_j) - static_cast<long>(i);
    if (dim >= 1 && i == dim - 1 && depth_lower >= dim - 1) b = static_cast<long>(red_j) - static_cast<long>(dim) - 1;
    worst = std::max(worst, b);
  }
  return static_cast<std::uint32_t>(std::max(worst + 1, 1L));
}

ASignResult a_invariant_sign_certified(const IdealHandle& i, const IdealHandle& j, std::uint32_t red_j,
                                       std::uint32_t depth_lower) {
  if (!colength(i).is_finite()) fail(ErrorCode::kNotPrimary, "a_invariant_sign_certified needs an m-primary ideal");
  const auto d = static_cast<std::uint32_t>(j.generators().size());
  if (d == 0) fail(ErrorCode::kHypothesis, "empty reduction");
  ASignResult out;
  out.spread = d;
  const std::uint32_t n = decisive_power(red_j, d, depth_lower);
  const bool low = reduces_at(bracket_power(j, n), i.power(n), d - 1);
  out.report.window = at("n", n);
  const std::string eq = "I^" + std::to_string(n * d) + (low ? " = " : " != ") + "J^[" + std::to_string(n) + "] I^" +
                         std::to_string(n * (d - 1));
  out.report.evidence.push_back({at("n", n), true, eq});
  out.report.status = Verdict::kHolds;
  out.report.note = "red_J(I) = " + std::to_string(red_j) + ", depth G(I) >= " + std::to_string(depth_lower) +
                    " force a_i(I^" + std::to_string(n) + ") <= 0";
  out.sign = low ? ASign::kNegative : ASign::kNonnegative;
  out.asymptotic_red = low ? d - 1 : d;
  return out;
}

bool is_regular_sequence(const std::vector<Polynomial>& xs, const RingPtr& ring) {
  if (xs.empty()) fail(ErrorCode::kStructural, "is_regular_sequence needs at least one element");
  std::vector<Polynomial> prefix;
  for (const Polynomial& x : xs) {
    if (!ring->reduce(x).coefficient(Monomial(ring->nvars())).is_zero()) return false;
    IdealHandle p(ring, prefix);
    if (!ideal_equals(ideal_quotient(p, x), p)) return false;
    prefix.push_back(x);
  }
  return true;
}

GradeEvidence grade_evidence(const IdealHandle& i, std::vector<Polynomial> candidates) {
  if (candidates.empty()) candidates = i.generators();
  GradeEvidence out;
  for (const Polynomial& c : candidates) {
    if (!membership(c, i)) continue;
    std::vector<Polynomial> trial = out.sequence;
    trial.push_back(c);
    if (is_regular_sequence(trial, i.ring_ptr())) out.sequence = std::move(trial);
  }
  out.lower = static_cast<std::uint32_t>(out.sequence.size());
  // grade(I) = k exactly when I consists of zero divisors modulo (x), i.e. ((x) : I) != (x).
  IdealHandle p(i.ring_ptr(), out.sequence);
  out.witness = containment_witness(p, ideal_quotient(p, i));
  out.exact = out.witness.has_value();
  return out;
}

VerdictReport graded_regular_sequence(const IdealHandle& i, const std::vector<Polynomial>& xs, std::uint32_t nmax) {
  VerdictReport r;
  r.window = range("n", 0, nmax);
  if (!is_regular_sequence(xs, i.ring_ptr())) {
    r.status = Verdict::kFails;
    r.note = "the elements are not a regular sequence of A";
    r.witness = "regular sequence test";
    return r;
  }
  const std::vector<std::int64_t> base = assoc_values(i, nmax);
  std::vector<std::int64_t> expected = base;
  const AmbientRing& ring = i.ring();
  for (std::size_t k = 1; k <= xs.size(); ++k) {
    for (std::size_t n = expected.size(); n-- > 1;) expected[n] -= expected[n - 1];
    RingPtr quotient = ring.with_relations(std::vector<Polynomial>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k)));
    const std::vector<std::int64_t> got = assoc_values(IdealHandle(quotient, i.generators()), nmax);
    bool ok = got == expected;
    std::string detail = "H(G(I/(first " + std::to_string(k) + "))) " + (ok ? "=" : "!=") + " (1-z)^" +
                         std::to_string(k) + " H(G(I))";
    r.evidence.push_back({at("k", static_cast<std::uint32_t>(k)), ok, detail});
    if (!ok && !r.witness) r.witness = ring.format(xs[k - 1]) + "* is a zero divisor on the associated graded ring";
  }
  settle_exact(r);
  return r;
}

VerdictReport is_rees_superficial(const Polynomial& x, const IdealHandle& i, std::uint32_t r0, std::uint32_t rmax,
                                  std::uint32_t smax) {
  VerdictReport r;
  r.window = range("r", std::max(r0, 1U), rmax) + ", " + range("s", 0, smax);
  const RingPtr& ring = i.ring_ptr();
  if (!membership(x, i)) {
    r.status = Verdict::kFails;
    r.witness = ring->format(x) + " lies outside " + i.to_string();
    return r;
  }
  const IdealHandle px = principal(ring, x);
  const IdealHandle m = maximal_ideal(ring);
  for (std::uint32_t a = std::max(r0, 1U); a <= rmax; ++a) {
    for (std::uint32_t s = 0; s <= smax; ++s) {
      IdealHandle lhs = ideal_intersection(px, ideal_product(i.power(a), m.power(s)));
      IdealHandle rhs = ideal_product(px, ideal_product(i.power(a - 1), m.power(s)));
      auto w = containment_witness(rhs, lhs);
      std::string pt = "r=" + std::to_string(a) + ",s=" + std::to_string(s);
      r.evidence.push_back({pt, !w, record(r, w, *ring, "lies in (x) and I^r m^s but not in x I^{r-1} m^s at " + pt)});
    }
  }
  settle_exact(r);
  return r;
}

VerdictReport is_superficial(const Polynomial& x, const IdealHandle& i, std::uint32_t lo, std::uint32_t hi) {
  VerdictReport r;
  r.window = range("n", lo, hi);
  if (!check_in_fiber(r, x, i)) return r;
  const IdealHandle floor = i.power(lo);
  for (std::uint32_t n = lo; n <= hi; ++n) {
    IdealHandle lhs = ideal_intersection(ideal_quotient(i.power(n + 1), x), floor);
    auto w = containment_witness(i.power(n), lhs);
    r.evidence.push_back({at("n", n), !w, record(r, w, i.ring(), "lies in (I^{n+1} : x) but not in I^n at " + at("n", n))});
  }
  settle_exact(r);
  return r;
}

VerdictReport is_filter_regular(const Polynomial& x, const IdealHandle& i, std::uint32_t lo, std::uint32_t hi) {
  VerdictReport r;
  r.window = range("j", lo, hi);
  if (!check_in_fiber(r, x, i)) return r;
  const AmbientRing& ring = i.ring();
  std::optional<std::string> last_witness;
  for (std::uint32_t j = lo; j <= hi; ++j) {
    // The condition says x* is injective from I^j/mI^j to I^{j+1}/mI^{j+1}.
    const FiberSpace src(i.power(j));
    const FiberSpace dst(i.power(j + 1));
    std::vector<std::vector<Scalar>> images;
    for (const Polynomial& b : src.basis()) images.push_back(dst.coordinates(x * b));
    auto kernel = kernel_vector(images, ring.field());
    std::string detail = "x* injective on degree " + std::to_string(j);
    if (kernel) {
      Polynomial e = ring.zero();
      for (std::size_t k = 0; k < kernel->size(); ++k) {
        if (!(*kernel)[k].is_zero()) e += src.basis()[k] * Polynomial::constant(ring.signature(), (*kernel)[k]);
      }
      detail = ring.format(x) + " * (" + ring.format(e) + ") lies in m I^" + std::to_string(j + 1) +
               " with " + ring.format(e) + " outside m I^" + std::to_string(j);
      last_witness = detail;
    }
    r.evidence.push_back({at("j", j), !kernel, detail});
  }
  settle_asymptotic(r);
  if (r.status == Verdict::kFails) r.witness = last_witness;
  return r;
}

VerdictReport power_filter_regular_transfer(const Polynomial& x, const IdealHandle& i, std::uint32_t n,
                                            std::uint32_t lo, std::uint32_t hi) {
  if (n == 0) fail(ErrorCode::kStructural, "power must be positive");
  VerdictReport r = is_filter_regular(x.pow(n), i.power(n), lo, hi);
  r.note = (r.note.empty() ? "" : r.note + "; ") + "tested x^" + std::to_string(n) + " on I^" + std::to_string(n);
  return r;
}

VerdictReport valabrega_valla(const IdealHandle& j, const IdealHandle& i, std::uint32_t lo, std::uint32_t hi) {
  VerdictReport r;
  r.window = range("n", std::max(lo, 1U), hi);
  for (std::uint32_t n = std::max(lo, 1U); n <= hi; ++n) {
    IdealHandle lhs = ideal_intersection(i.power(n), j);
    IdealHandle rhs = ideal_product(j, i.power(n - 1));
    auto w = containment_witness(rhs, lhs);
    r.evidence.push_back({at("n", n), !w, record(r, w, i.ring(), "lies in I^n and J but not in J I^{n-1} at " + at("n", n))});
  }
  settle_exact(r);
  return r;
}

VerdictReport valabrega_valla(const SemigroupIdeal& j, const SemigroupIdeal& i, std::uint32_t lo,
                              std::uint32_t hi) {
  VerdictReport r;
  r.window = range("n", std::max(lo, 1U), hi);
  for (std::uint32_t n = std::max(lo, 1U); n <= hi; ++n) {
    SemigroupIdeal lhs = sg_intersection(sg_ideal_power(i, n), j);
    SemigroupIdeal rhs = sg_ideal_product(j, sg_ideal_power(i, n - 1));
    std::optional<std::uint32_t> w;
    for (std::uint32_t e : lhs.generators()) {
      if (!rhs.contains(e)) {
        w = e;
        break;
      }
    }
    std::string detail = "equal";
    if (w) {
      detail = "t^" + std::to_string(*w) + " lies in I^n and J but not in J I^{n-1} at " + at("n", n);
      if (!r.witness) r.witness = detail;
    }
    r.evidence.push_back({at("n", n), !w, detail});
  }
  settle_exact(r);
  return r;
}

VerdictReport v2_infinity(const IdealHandle& i, const IdealHandle& j, std::uint32_t lo, std::uint32_t hi) {
  VerdictReport r;
  r.window = range("n", std::max(lo, 1U), hi);
  for (std::uint32_t n = std::max(lo, 1U); n <= hi; ++n) {
    const IdealHandle jn = bracket_power(j, n);
    IdealHandle lhs = ideal_intersection(i.power(2 * n), jn);
    IdealHandle rhs = ideal_product(jn, i.power(n));
    auto w = containment_witness(rhs, lhs);
    r.evidence.push_back(
        {at("n", n), !w, record(r, w, i.ring(), "lies in I^{2n} and J^[n] but not in J^[n] I^n at " + at("n", n))});
  }
  settle_asymptotic(r);
  return r;
}

RatliffRush ratliff_rush(const IdealHandle& i, std::uint32_t bound) {
  const RingPtr& ring = i.ring_ptr();
  const IdealHandle zero = zero_ideal(ring);
  bool regular = std::any_of(i.generators().begin(), i.generators().end(),
                             [&](const Polynomial& g) { return ideal_quotient(zero, g).is_zero(); });
  if (!regular) fail(ErrorCode::kHypothesis, "ratliff_rush: no generator of " + i.to_string() + " is a nonzerodivisor");
  IdealHandle cur = ideal_quotient(i.power(2), i);
  for (std::uint32_t n = 2; n <= bound; ++n) {
    IdealHandle next = ideal_sum(cur, ideal_quotient(i.power(n + 1), i.power(n)));
    if (ideal_contains(cur, next)) return RatliffRush{cur, n};
    cur = next;
  }
  fail(ErrorCode::kNoStabilization, "Ratliff-Rush closure of " + i.to_string() + " did not stabilize by n = " +
                                        std::to_string(bound));
}

}  // namespace fibrant
