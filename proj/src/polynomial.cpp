#include "fibrant/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fibrant/errors.hpp"

namespace fibrant {

namespace {

bool greater_in(const RingSignature& sig, const Monomial& a, const Monomial& b) {
  return monomial_compare(a, b, sig.order) == std::strong_ordering::greater;
}

}  // namespace

Polynomial Polynomial::constant(const RingSignature& sig, const Scalar& c) {
  return term(sig, c, Monomial(sig.nvars));
}

Polynomial Polynomial::constant(const RingSignature& sig, long c) {
  return constant(sig, Scalar::from_int(c, sig.field));
}

Polynomial Polynomial::monomial(const RingSignature& sig, const Monomial& m) {
  return term(sig, Scalar::one(sig.field), m);
}

Polynomial Polynomial::term(const RingSignature& sig, const Scalar& c, const Monomial& m) {
  if (m.nvars() != sig.nvars) fail(ErrorCode::kStructural, "monomial/ring variable count mismatch");
  if (!(c.field() == sig.field)) fail(ErrorCode::kStructural, "coefficient field mismatch");
  Polynomial p(sig);
  if (!c.is_zero()) p.terms_.push_back(Term{c, m});
  return p;
}

Polynomial Polynomial::variable(const RingSignature& sig, std::size_t index) {
  return monomial(sig, Monomial::variable(sig.nvars, index));
}

Polynomial Polynomial::from_terms(const RingSignature& sig, std::vector<Term> terms) {
  Polynomial p(sig);
  for (const Term& t : terms) {
    if (t.mono.nvars() != sig.nvars) {
      fail(ErrorCode::kStructural, "monomial/ring variable count mismatch");
    }
    if (!(t.coeff.field() == sig.field)) fail(ErrorCode::kStructural, "coefficient field mismatch");
  }
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return greater_in(sig_, a.mono, b.mono);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else if (!t.coeff.is_zero()) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) fail(ErrorCode::kStructural, "leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::low_degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().mono.degree();
  for (const Term& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || degree() == low_degree();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [this](const Term& t, const Monomial& key) {
    return greater_in(sig_, t.mono, key);
  });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Scalar::zero(sig_.field);
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!(sig_ == g.sig_)) {
    fail(ErrorCode::kStructural, "polynomials from different ring signatures");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial r(f.sig_);
  r.terms_.reserve(f.size() + g.size());
  auto i = f.terms_.begin();
  auto j = g.terms_.begin();
  while (i != f.terms_.end() && j != g.terms_.end()) {
    auto c = monomial_compare(i->mono, j->mono, f.sig_.order);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(*i++);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(*j++);
    } else {
      Scalar s = i->coeff + j->coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{std::move(s), i->mono});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, f.terms_.end());
  r.terms_.insert(r.terms_.end(), j, g.terms_.end());
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.sig_);
  if (g.size() == 1) return f.times_term(g.terms_[0].coeff, g.terms_[0].mono);
  if (f.size() == 1) return g.times_term(f.terms_[0].coeff, f.terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const Term& a : f.terms_) {
    for (const Term& b : g.terms_) prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
  }
  Polynomial r(f.sig_);
  r.terms_ = std::move(prod);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(sig_);
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.mono = t.mono * m;
  return p;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(sig_);
  Polynomial p(sig_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.coeff * c, t.mono * m});
  return p;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(sig_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

void Polynomial::subtract_scaled(const Scalar& c, const Monomial& m, const Polynomial& g) {
  check_compatible(g);
  if (c.is_zero() || g.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  const Scalar neg = -c;
  while (i != terms_.end() && j != g.terms_.end()) {
    Monomial shifted = j->mono * m;
    auto cmp = monomial_compare(i->mono, shifted, sig_.order);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(*i++));
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(Term{j->coeff * neg, shifted});
      ++j;
    } else {
      Scalar s = i->coeff + j->coeff * neg;
      if (!s.is_zero()) out.push_back(Term{std::move(s), shifted});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != g.terms_.end(); ++j) out.push_back(Term{j->coeff * neg, j->mono * m});
  terms_ = std::move(out);
}

Polynomial Polynomial::rebase(const RingSignature& target,
                              std::span<const std::size_t> var_map) const {
  if (var_map.size() != sig_.nvars) fail(ErrorCode::kStructural, "variable map size mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  std::vector<std::uint32_t> exps(target.nvars);
  for (const Term& t : terms_) {
    std::fill(exps.begin(), exps.end(), 0U);
    for (std::size_t i = 0; i < sig_.nvars; ++i) {
      if (var_map[i] >= target.nvars) fail(ErrorCode::kStructural, "variable map out of range");
      exps[var_map[i]] += t.mono[i];
    }
    terms.push_back(Term{t.coeff, Monomial::from_exponents(exps)});
  }
  return from_terms(target, std::move(terms));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!(f.sig_ == g.sig_) || f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coeff == g.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorCode::kStructural, "division by the zero polynomial");
  const RingSignature& sig = f.signature();
  Polynomial rest = f;
  std::vector<Term> quotient;
  const Scalar inv = g.leading_coefficient().inverse();
  while (!rest.is_zero()) {
    auto q = monomial_divrem(rest.leading_monomial(), g.leading_monomial());
    if (!q) return std::nullopt;
    Scalar c = rest.leading_coefficient() * inv;
    rest.subtract_scaled(c, *q, g);
    quotient.push_back(Term{std::move(c), *q});
  }
  return Polynomial::from_terms(sig, std::move(quotient));
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names,
             const RingSignature& sig)
      : text_(text), names_(names), sig_(sig) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::kParse, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = product();
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) error("division only by nonzero constants");
        acc = acc.scaled(d.leading_coefficient().inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > kMaxExponent) error("exponent too large");
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpq_class v(mpz_class(std::string(text_.substr(start, pos_ - start))));
      return Polynomial::constant(sig_, Scalar::from_rational(v, sig_.field));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string id(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), id);
      if (it == names_.end()) {
        pos_ = start;
        error("unknown variable '" + id + "'");
      }
      return Polynomial::variable(sig_, static_cast<std::size_t>(it - names_.begin()));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  const RingSignature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const RingSignature& sig) {
  if (names.size() != sig.nvars) fail(ErrorCode::kStructural, "variable name count mismatch");
  return PolyParser(text, names, sig).parse();
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      out << c;
    } else {
      if (c != "1") out << c << '*';
      out << format_monomial(t.mono, names);
    }
  }
  return out.str();
}

}  // namespace fibrant
