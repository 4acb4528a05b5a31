#include "fibrant/monomial.hpp"

#include <algorithm>

#include "fibrant/errors.hpp"

namespace fibrant {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVariables) {
    fail(ErrorCode::kStructural,
         "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

void check_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    fail(ErrorCode::kStructural, "monomials over different variable counts");
  }
}

// Reverse lexicographic tie-break on [lo, hi): the monomial with the smaller
// exponent in the last differing variable is larger.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo,
                                 std::size_t hi) {
  for (std::size_t i = hi; i > lo; --i) {
    std::uint32_t ea = a[i - 1];
    std::uint32_t eb = b[i - 1];
    if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_block(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  return revlex_tail(a, b, lo, hi);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<std::uint32_t> exps)
    : Monomial(nvars) {
  if (exps.size() != nvars) fail(ErrorCode::kStructural, "exponent list length mismatch");
  std::size_t i = 0;
  for (std::uint32_t e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  if (index >= nvars) fail(ErrorCode::kStructural, "variable index out of range");
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e > kMaxExponent) fail(ErrorCode::kStructural, "exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

std::vector<std::uint32_t> Monomial::exponents() const {
  return std::vector<std::uint32_t>(exps_.begin(), exps_.begin() + nvars_);
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0) mask |= 1U << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  Monomial m = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    std::uint32_t e = static_cast<std::uint32_t>(a.exps_[i]) + b.exps_[i];
    if (e > kMaxExponent) fail(ErrorCode::kStructural, "exponent overflow");
    m.exps_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(exps_[i]) * k;
    if (e > kMaxExponent) fail(ErrorCode::kStructural, "exponent overflow");
    m.set(i, static_cast<std::uint32_t>(e));
  }
  return m;
}

std::optional<Monomial> monomial_divrem(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  if (!b.divides(a)) return std::nullopt;
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = a[i] - b[i];
  return Monomial::from_exponents(e);
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial::from_exponents(e);
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial::from_exponents(e);
}

Monomial monomial_colon(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial::from_exponents(e);
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    h ^= m[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string TermOrder::name() const {
  switch (kind) {
    case OrderKind::kGrevlex: return "grevlex";
    case OrderKind::kLex: return "lex";
    case OrderKind::kElimination: return "elim(" + std::to_string(split) + ")";
  }
  return "?";
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const TermOrder& ord) {
  check_same_nvars(a, b);
  const std::size_t n = a.nvars();
  switch (ord.kind) {
    case OrderKind::kGrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, 0, n);
    case OrderKind::kLex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::kElimination: {
      std::size_t split = std::min<std::size_t>(ord.split, n);
      auto head = grevlex_block(a, b, 0, split);
      if (head != std::strong_ordering::equal) return head;
      return grevlex_block(a, b, split, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace fibrant
