#include "fibrant/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "fibrant/errors.hpp"

namespace fibrant {

namespace {

// Total order on polynomials used only for deduplication.
struct PolyLess {
  bool operator()(const Polynomial& f, const Polynomial& g) const {
    const auto& a = f.terms();
    const auto& b = g.terms();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      auto c = monomial_compare(a[k].mono, b[k].mono, f.signature().order);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      if (!(a[k].coeff == b[k].coeff)) {
        return cmp(a[k].coeff.to_rational(), b[k].coeff.to_rational()) < 0;
      }
    }
    return a.size() < b.size();
  }
};

std::vector<Monomial> leading_monomials(std::span<const Polynomial> polys) {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) out.push_back(p.leading_monomial());
  return out;
}

std::vector<Monomial> relation_monomials(const AmbientRing& ring) {
  return leading_monomials(ring.relation_basis());
}

IdealHandle from_lifted(const RingPtr& ring, const std::vector<Monomial>& lifted) {
  const std::vector<Monomial> q = relation_monomials(*ring);
  std::vector<Polynomial> gens;
  for (const Monomial& m : lifted) {
    if (!monomial_ideal::contains(q, m)) gens.push_back(Polynomial::monomial(ring->signature(), m));
  }
  return IdealHandle(ring, std::move(gens));
}

void check_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring_ptr() != b.ring_ptr()) fail(ErrorCode::kStructural, "ideals live in different rings");
}

std::vector<Polynomial> with_relations(const IdealHandle& a) {
  std::vector<Polynomial> out = a.generators();
  const auto& q = a.ring().relations();
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

// Generators of (A) ∩ (B) in the polynomial ring, by eliminating t from
// t*A + (1 - t)*B.
std::vector<Polynomial> intersect_raw(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                      const RingSignature& sig) {
  if (a.empty() || b.empty()) return {};
  if (sig.nvars + 1 > kMaxVariables) {
    fail(ErrorCode::kStructural, "intersection needs one spare variable slot");
  }
  RingSignature ext{sig.nvars + 1, sig.field, TermOrder::elimination(1)};
  std::vector<std::size_t> shift(sig.nvars);
  for (std::size_t i = 0; i < sig.nvars; ++i) shift[i] = i + 1;
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  gens.reserve(a.size() + b.size());
  for (const Polynomial& f : a) gens.push_back(t * f.rebase(ext, shift));
  for (const Polynomial& g : b) gens.push_back(one_minus_t * g.rebase(ext, shift));
  std::vector<Polynomial> basis = reduced_groebner_basis(std::move(gens));
  std::vector<std::size_t> back(sig.nvars + 1, 0);
  for (std::size_t i = 0; i < sig.nvars; ++i) back[i + 1] = i;
  std::vector<Polynomial> out;
  for (const Polynomial& g : basis) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(),
                             [](const Term& term) { return term.mono[0] != 0; });
    if (has_t) continue;
    // back[0] is never used because no term involves t.
    out.push_back(g.rebase(sig, back));
  }
  return out;
}

bool jointly_graded(const IdealHandle& a, const std::vector<const Polynomial*>& extra) {
  if (const auto& w = a.grading()) {
    bool ok = std::all_of(extra.begin(), extra.end(),
                          [&](const Polynomial* p) { return is_weighted_homogeneous(*p, *w); });
    if (ok) return true;
  }
  std::vector<const Polynomial*> all;
  for (const Polynomial& g : a.generators()) all.push_back(&g);
  for (const Polynomial& r : a.ring().relations()) all.push_back(&r);
  all.insert(all.end(), extra.begin(), extra.end());
  return positive_grading(all, a.ring().nvars()).has_value();
}

}  // namespace

struct IdealHandle::State {
  RingPtr ring;
  std::vector<Polynomial> gens;
  bool monomial = true;
  std::mutex mutex;
  std::optional<std::vector<Polynomial>> gb;
  std::optional<std::vector<Monomial>> lifted;
  std::optional<std::optional<std::vector<long>>> grading;
  std::map<std::uint32_t, IdealHandle> powers;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) : state_(std::make_shared<State>()) {
  if (!ring) fail(ErrorCode::kStructural, "ideal without a ring");
  state_->ring = std::move(ring);
  const AmbientRing& r = *state_->ring;
  std::set<Polynomial, PolyLess> seen;
  bool unit = false;
  for (Polynomial& g : gens) {
    if (!(g.signature() == r.signature())) {
      fail(ErrorCode::kStructural, "generator does not belong to " + r.describe());
    }
    Polynomial h = r.reduce(g);
    if (h.is_zero()) continue;
    h = h.monic();
    if (h.is_constant()) {
      unit = true;
      break;
    }
    if (seen.insert(h).second) state_->gens.push_back(std::move(h));
  }
  if (unit) state_->gens = {r.one()};
  state_->monomial = std::all_of(state_->gens.begin(), state_->gens.end(),
                                 [](const Polynomial& g) { return g.is_monomial(); });
}

IdealHandle IdealHandle::parse(RingPtr ring, std::string_view list) {
  std::vector<Polynomial> gens = ring->parse_list(list);
  return IdealHandle(std::move(ring), std::move(gens));
}

const RingPtr& IdealHandle::ring_ptr() const {
  if (!state_) fail(ErrorCode::kStructural, "use of an empty ideal handle");
  return state_->ring;
}

const std::vector<Polynomial>& IdealHandle::generators() const {
  if (!state_) fail(ErrorCode::kStructural, "use of an empty ideal handle");
  return state_->gens;
}

bool IdealHandle::is_monomial() const {
  ring_ptr();
  return state_->monomial;
}

bool IdealHandle::monomial_path() const {
  return !general_path_forced() && is_monomial() && ring().relations_monomial();
}

const std::optional<std::vector<long>>& IdealHandle::grading() const {
  ring_ptr();
  {
    std::lock_guard lock(state_->mutex);
    if (state_->grading) return *state_->grading;
  }
  std::vector<const Polynomial*> all;
  for (const Polynomial& g : state_->gens) all.push_back(&g);
  for (const Polynomial& r : ring().relations()) all.push_back(&r);
  auto w = positive_grading(all, ring().nvars());
  std::lock_guard lock(state_->mutex);
  if (!state_->grading) state_->grading = std::move(w);
  return *state_->grading;
}

const std::vector<Polynomial>& IdealHandle::groebner_basis() const {
  ring_ptr();
  {
    std::lock_guard lock(state_->mutex);
    if (state_->gb) return *state_->gb;
  }
  std::vector<Polynomial> basis = reduced_groebner_basis(with_relations(*this));
  std::lock_guard lock(state_->mutex);
  if (!state_->gb) state_->gb = std::move(basis);
  return *state_->gb;
}

const std::vector<Monomial>& IdealHandle::lifted_monomials() const {
  if (!monomial_path()) fail(ErrorCode::kStructural, "lifted monomials of a non-monomial ideal");
  {
    std::lock_guard lock(state_->mutex);
    if (state_->lifted) return *state_->lifted;
  }
  std::vector<Monomial> all = leading_monomials(state_->gens);
  for (const Monomial& m : relation_monomials(ring())) all.push_back(m);
  std::vector<Monomial> mins = monomial_ideal::minimalize(std::move(all));
  std::lock_guard lock(state_->mutex);
  if (!state_->lifted) state_->lifted = std::move(mins);
  return *state_->lifted;
}

Polynomial IdealHandle::normal_form(const Polynomial& f) const {
  if (!(f.signature() == ring().signature())) {
    fail(ErrorCode::kStructural, "polynomial does not belong to " + ring().describe());
  }
  if (monomial_path()) {
    const auto& lifted = lifted_monomials();
    std::vector<Term> keep;
    for (const Term& t : f.terms()) {
      if (!monomial_ideal::contains(lifted, t.mono)) keep.push_back(t);
    }
    return Polynomial::from_terms(f.signature(), std::move(keep));
  }
  return fibrant::normal_form(f, groebner_basis());
}

bool IdealHandle::contains_polynomially(const Polynomial& f) const { return normal_form(f).is_zero(); }

IdealHandle IdealHandle::power(std::uint32_t n) const {
  if (n == 0) return unit_ideal(ring_ptr());
  if (n == 1) return *this;
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->powers.find(n);
    if (it != state_->powers.end()) return it->second;
  }
  IdealHandle half = power(n / 2);
  IdealHandle result = ideal_product(half, half);
  if (n % 2 == 1) result = ideal_product(result, *this);
  std::lock_guard lock(state_->mutex);
  return state_->powers.emplace(n, result).first->second;
}

std::string IdealHandle::to_string() const {
  std::string out = "(";
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += ring().format(gens[i]);
  }
  return out + ")";
}

IdealHandle maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(ring->variable(i));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle unit_ideal(const RingPtr& ring) { return IdealHandle(ring, {ring->one()}); }

IdealHandle zero_ideal(const RingPtr& ring) { return IdealHandle(ring, {}); }

IdealHandle bracket_power(const IdealHandle& j, std::uint32_t n) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : j.generators()) gens.push_back(g.pow(n));
  return IdealHandle(j.ring_ptr(), std::move(gens));
}

std::vector<Polynomial> groebner_basis(const IdealHandle& i) { return i.groebner_basis(); }

Polynomial normal_form(const Polynomial& f, const IdealHandle& i) { return i.normal_form(f); }

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  if (a.monomial_path() && b.monomial_path()) {
    return from_lifted(a.ring_ptr(), monomial_ideal::sum(a.lifted_monomials(), b.lifted_monomials()));
  }
  return IdealHandle(a.ring_ptr(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  if (a.monomial_path() && b.monomial_path()) {
    std::vector<Monomial> prod = monomial_ideal::product(leading_monomials(a.generators()),
                                                         leading_monomials(b.generators()));
    std::vector<Monomial> lifted = monomial_ideal::sum(prod, relation_monomials(a.ring()));
    return from_lifted(a.ring_ptr(), lifted);
  }
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Polynomial& f : a.generators()) {
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  }
  return IdealHandle(a.ring_ptr(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, std::uint32_t n) { return a.power(n); }

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  if (a.monomial_path() && b.monomial_path()) {
    return from_lifted(a.ring_ptr(),
                       monomial_ideal::intersection(a.lifted_monomials(), b.lifted_monomials()));
  }
  if (a.is_zero() || b.is_zero()) return zero_ideal(a.ring_ptr());
  std::vector<Polynomial> gens =
      intersect_raw(with_relations(a), with_relations(b), a.ring().signature());
  return IdealHandle(a.ring_ptr(), std::move(gens));
}

IdealHandle ideal_quotient(const IdealHandle& a, const Polynomial& f) {
  const AmbientRing& ring = a.ring();
  if (a.contains_polynomially(f)) return unit_ideal(a.ring_ptr());
  if (a.monomial_path() && f.is_monomial()) {
    return from_lifted(a.ring_ptr(), monomial_ideal::quotient(a.lifted_monomials(), f.leading_monomial()));
  }
  std::vector<Polynomial> meet = intersect_raw(with_relations(a), {f}, ring.signature());
  std::vector<Polynomial> gens;
  gens.reserve(meet.size());
  for (const Polynomial& g : meet) {
    auto q = divide_exact(g, f);
    if (!q) fail(ErrorCode::kInternalInconsistency, "element of (f) not divisible by f");
    gens.push_back(std::move(*q));
  }
  return IdealHandle(a.ring_ptr(), std::move(gens));
}

IdealHandle ideal_quotient(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  if (b.is_zero()) return unit_ideal(a.ring_ptr());
  if (a.monomial_path() && b.monomial_path()) {
    return from_lifted(a.ring_ptr(), monomial_ideal::quotient(a.lifted_monomials(),
                                                               leading_monomials(b.generators())));
  }
  std::optional<IdealHandle> acc;
  for (const Polynomial& g : b.generators()) {
    IdealHandle part = ideal_quotient(a, g);
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return *acc;
}

IdealHandle saturation(const IdealHandle& a, const Polynomial& f) {
  IdealHandle current = a;
  for (;;) {
    IdealHandle next = ideal_quotient(current, f);
    if (ideal_equals_polynomially(current, next)) return current;
    current = next;
  }
}

bool membership(const Polynomial& f, const IdealHandle& i) {
  const Polynomial g = i.ring().reduce(f);
  if (i.contains_polynomially(g)) return true;
  if (i.monomial_path() || jointly_graded(i, {&g})) return false;
  // f lies in I A_m iff f lies in I + m f (Nakayama on the cyclic module).
  std::vector<Polynomial> gens = i.generators();
  for (std::size_t v = 0; v < i.ring().nvars(); ++v) gens.push_back(i.ring().variable(v) * g);
  IdealHandle widened(i.ring_ptr(), std::move(gens));
  return widened.contains_polynomially(g);
}

std::optional<Polynomial> containment_witness(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  for (const Polynomial& g : b.generators()) {
    if (!membership(g, a)) return g;
  }
  return std::nullopt;
}

bool ideal_contains(const IdealHandle& a, const IdealHandle& b) { return !containment_witness(a, b); }

bool ideal_equals(const IdealHandle& a, const IdealHandle& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

bool ideal_equals_polynomially(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  if (a.monomial_path() && b.monomial_path()) return a.lifted_monomials() == b.lifted_monomials();
  return a.groebner_basis() == b.groebner_basis();
}

IdealHandle maximal_times(const IdealHandle& i) { return ideal_product(maximal_ideal(i.ring_ptr()), i); }

}  // namespace fibrant
