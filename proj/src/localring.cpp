#include "fibrant/localring.hpp"

#include <functional>

#include "fibrant/errors.hpp"

namespace fibrant {

namespace {

constexpr std::size_t kMaxTruncation = 1U << 12;

LengthValue from_count(const std::optional<std::size_t>& c) {
  return c ? LengthValue::finite(*c) : LengthValue::infinite();
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& polys) {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) out.push_back(p.leading_monomial());
  return out;
}

std::optional<std::size_t> polynomial_colength(const IdealHandle& u) {
  const std::size_t n = u.ring().nvars();
  if (u.monomial_path()) return monomial_ideal::count_standard(u.lifted_monomials(), n);
  return monomial_ideal::count_standard(leading_monomials(u.groebner_basis()), n);
}

bool is_unit(const IdealHandle& u) {
  const auto& gb = u.groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

// A finite quotient R/U of dimension d is supported only at the origin iff
// every x_i^d lies in U; then local and polynomial colengths agree.
bool supported_at_origin(const IdealHandle& u, std::size_t d) {
  const AmbientRing& ring = u.ring();
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!u.normal_form(ring.variable(i).pow(static_cast<std::uint32_t>(d))).is_zero()) return false;
  }
  return true;
}

// Smallest N (searched by doubling) with f(N) == f(N + 1); returns f(N).
// Callers guarantee f is nondecreasing and eventually constant from the
// first such N on.
std::size_t stable_value(const std::function<std::size_t(std::size_t)>& f) {
  for (std::size_t n = 1; n <= kMaxTruncation; n *= 2) {
    std::size_t a = f(n);
    if (a == f(n + 1)) return a;
  }
  fail(ErrorCode::kResourceLimit, "local length did not stabilize below truncation degree " +
                                      std::to_string(kMaxTruncation));
}

void for_each_monomial_below(std::size_t nvars, std::uint32_t max_degree,
                             const std::function<void(const Monomial&)>& visit) {
  std::vector<std::uint32_t> exps(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t left) {
    if (v == nvars) {
      visit(Monomial::from_exponents(exps));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[v] = e;
      rec(v + 1, left - e);
    }
    exps[v] = 0;
  };
  rec(0, max_degree);
}

}  // namespace

std::size_t LengthValue::value() const {
  if (!value_) fail(ErrorCode::kStructural, "length is infinite");
  return *value_;
}

std::string LengthValue::to_string() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

bool is_locally_primary(const IdealHandle& u) {
  if (polynomial_colength(u)) return true;
  if (u.monomial_path() || u.grading()) return false;
  // U A_m is m-primary iff every (U : x_i^inf) contains a unit of A_m.
  const RingPtr& ring = u.ring_ptr();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    IdealHandle sat = saturation(u, ring->variable(i));
    if (!is_unit(ideal_sum(sat, maximal_ideal(ring)))) return false;
  }
  return true;
}

LengthValue colength(const IdealHandle& u) {
  auto poly = polynomial_colength(u);
  if (u.monomial_path() || u.grading()) return from_count(poly);
  if (poly && supported_at_origin(u, *poly)) return LengthValue::finite(*poly);
  if (!poly && !is_locally_primary(u)) return LengthValue::infinite();
  // dim R/(U + m^N) rises until m^N lies in U A_m, then stays put.
  const IdealHandle m = maximal_ideal(u.ring_ptr());
  return LengthValue::finite(stable_value([&](std::size_t n) {
    return *polynomial_colength(ideal_sum(u, m.power(static_cast<std::uint32_t>(n))));
  }));
}

std::size_t min_gens(const IdealHandle& u) { return FiberSpace(u).dimension(); }

LengthValue quotient_dim(const IdealHandle& u, const IdealHandle& v) {
  if (auto w = containment_witness(u, v)) {
    fail(ErrorCode::kContainment, "quotient_dim: " + u.ring().format(*w) + " lies outside " + u.to_string());
  }
  LengthValue cu = colength(u);
  if (cu.is_finite()) {
    LengthValue cv = colength(v);
    if (!cv.is_finite()) return cv;
    return LengthValue::finite(cv.value() - cu.value());
  }
  if (!is_locally_primary(ideal_quotient(v, u))) return LengthValue::infinite();
  // U/V has finite length: dim U/(V + m^N U) stabilizes at its value.
  const IdealHandle m = maximal_ideal(u.ring_ptr());
  const RingSignature& sig = u.ring().signature();
  return LengthValue::finite(stable_value([&](std::size_t n) {
    IdealHandle w = ideal_sum(v, ideal_product(m.power(static_cast<std::uint32_t>(n)), u));
    LinearBasis span(sig);
    for_each_monomial_below(sig.nvars, static_cast<std::uint32_t>(n - 1), [&](const Monomial& t) {
      for (const Polynomial& g : u.generators()) span.insert(w.normal_form(g.times_monomial(t)));
    });
    return span.dimension();
  }));
}

FiberSpace::FiberSpace(const IdealHandle& u) : u_(u), monomial_(u.monomial_path()) {
  const AmbientRing& ring = u.ring();
  if (monomial_) {
    lifted_ = u.lifted_monomials();
    relation_lms_ = leading_monomials(ring.relation_basis());
    for (const Monomial& m : lifted_) {
      if (monomial_ideal::contains(relation_lms_, m)) continue;
      index_.emplace(m, basis_.size());
      basis_.push_back(Polynomial::monomial(ring.signature(), m));
    }
    return;
  }
  mu_basis_ = maximal_times(u).groebner_basis();
  LinearBasis select(ring.signature());
  span_.emplace(ring.signature());
  for (const Polynomial& g : u.generators()) {
    Polynomial nf = normal_form(g, mu_basis_);
    if (select.insert(nf)) {
      basis_.push_back(g);
      span_->insert(nf);
    }
  }
}

std::vector<Scalar> FiberSpace::coordinates(const Polynomial& f) const {
  const AmbientRing& ring = u_.ring();
  if (monomial_) {
    std::vector<Scalar> out(basis_.size(), Scalar::zero(ring.field()));
    for (const Term& t : f.terms()) {
      if (monomial_ideal::contains(relation_lms_, t.mono)) continue;
      auto it = index_.find(t.mono);
      if (it != index_.end()) {
        out[it->second] += t.coeff;
      } else if (!monomial_ideal::contains(lifted_, t.mono)) {
        fail(ErrorCode::kContainment, "element " + ring.format(f) + " lies outside " + u_.to_string());
      }
    }
    return out;
  }
  auto coords = span_->coordinates(normal_form(f, mu_basis_));
  if (!coords) {
    fail(ErrorCode::kContainment, "element " + ring.format(f) + " lies outside " + u_.to_string());
  }
  coords->resize(basis_.size(), Scalar::zero(ring.field()));
  return *coords;
}

std::size_t FiberSpace::image_rank(const std::vector<Polynomial>& elems) const {
  std::vector<SparseRow> rows;
  rows.reserve(elems.size());
  for (const Polynomial& e : elems) {
    std::vector<Scalar> c = coordinates(e);
    SparseRow row;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_zero()) row.emplace_back(k, std::move(c[k]));
    }
    rows.push_back(std::move(row));
  }
  return sparse_rank(rows, basis_.size(), u_.ring().field());
}

}  // namespace fibrant
