#include "fibrant/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "fibrant/errors.hpp"

namespace fibrant {

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint32_t> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty() || generators.front() == 0) {
    fail(ErrorCode::kStructural, "semigroup generators must be positive");
  }
  std::uint32_t g = 0;
  for (std::uint32_t a : generators) g = std::gcd(g, a);
  if (g != 1) fail(ErrorCode::kStructural, "semigroup generators must have gcd 1");

  const std::uint32_t a = generators.front();
  std::vector<bool> member{true};
  std::uint32_t run = 1;
  std::vector<std::uint32_t> minimal;
  // Walk n upward; once `a` consecutive members appear, everything after is in S.
  for (std::uint32_t n = 1; run < a; ++n) {
    bool in = false;
    for (std::uint32_t b : minimal) {
      if (b <= n && member[n - b]) {
        in = true;
        break;
      }
    }
    if (!in && std::binary_search(generators.begin(), generators.end(), n)) {
      minimal.push_back(n);
      in = true;
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  if (a == 1) minimal = {1};
  gens_ = std::move(minimal);
  // The last `a` entries are members; the conductor is where that run began.
  std::uint32_t c = static_cast<std::uint32_t>(member.size());
  while (c > 0 && member[c - 1]) --c;
  conductor_ = c;
  member.resize(c);
  below_conductor_ = std::move(member);
  if (!std::all_of(generators.begin(), generators.end(), [&](std::uint32_t x) { return contains(x); })) {
    fail(ErrorCode::kInternalInconsistency, "semigroup generator outside the computed semigroup");
  }
}

bool NumericalSemigroup::contains(long n) const {
  if (n < 0) return false;
  if (static_cast<std::uint64_t>(n) >= conductor_) return true;
  return below_conductor_[static_cast<std::size_t>(n)];
}

std::string NumericalSemigroup::to_string() const { return "semigroup<" + join(gens_) + ">"; }

SemigroupIdeal::SemigroupIdeal(SemigroupPtr s, std::vector<std::uint32_t> exponents) : s_(std::move(s)) {
  if (!s_) fail(ErrorCode::kStructural, "semigroup ideal without a semigroup");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  for (std::uint32_t e : exponents) {
    if (!s_->contains(e)) {
      fail(ErrorCode::kStructural, "t^" + std::to_string(e) + " is not an element of " + s_->to_string());
    }
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](std::uint32_t f) {
      return s_->contains(static_cast<long>(e) - static_cast<long>(f));
    });
    if (!redundant) gens_.push_back(e);
  }
}

bool SemigroupIdeal::contains(long n) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](std::uint32_t e) { return s_->contains(n - static_cast<long>(e)); });
}

std::string SemigroupIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "t^" + std::to_string(gens_[i]);
  }
  return out + ")";
}

SemigroupIdeal sg_unit_ideal(const SemigroupPtr& s) { return SemigroupIdeal(s, {0}); }

SemigroupIdeal sg_maximal_ideal(const SemigroupPtr& s) { return SemigroupIdeal(s, s->generators()); }

SemigroupIdeal sg_ideal_product(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.semigroup() != b.semigroup()) fail(ErrorCode::kStructural, "ideals of different semigroups");
  std::vector<std::uint32_t> sums;
  for (std::uint32_t e : a.generators()) {
    for (std::uint32_t f : b.generators()) sums.push_back(e + f);
  }
  return SemigroupIdeal(a.semigroup(), std::move(sums));
}

SemigroupIdeal sg_ideal_power(const SemigroupIdeal& a, std::uint32_t n) {
  SemigroupIdeal result = sg_unit_ideal(a.semigroup());
  for (std::uint32_t k = 0; k < n; ++k) result = sg_ideal_product(result, a);
  return result;
}

SemigroupIdeal sg_intersection(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.semigroup() != b.semigroup()) fail(ErrorCode::kStructural, "ideals of different semigroups");
  const SemigroupPtr& s = a.semigroup();
  if (a.is_zero() || b.is_zero()) return SemigroupIdeal(s, {});
  // Past `bound` both ideals contain everything, so minimal generators of the
  // intersection stay below bound + smallest generator of S.
  const std::uint32_t bound = std::max(a.generators().front(), b.generators().front()) + s->conductor();
  const std::uint32_t limit = bound + s->generators().front();
  std::vector<std::uint32_t> common;
  for (std::uint32_t n = 0; n < 2 * limit; ++n) {
    if (a.contains(n) && b.contains(n)) common.push_back(n);
  }
  SemigroupIdeal out(s, std::move(common));
  if (!out.generators().empty() && out.generators().back() >= limit) {
    fail(ErrorCode::kInternalInconsistency, "semigroup intersection bound too small");
  }
  return out;
}

bool sg_membership(long n, const SemigroupIdeal& a) { return a.contains(n); }

std::size_t sg_mu(const SemigroupIdeal& a) { return a.generators().size(); }

}  // namespace fibrant
