#include "fibrant/ring.hpp"

#include <algorithm>
#include <numeric>

#include "fibrant/errors.hpp"
#include "fibrant/groebner.hpp"

namespace fibrant {

namespace {

void validate_names(const std::vector<std::string>& names) {
  if (names.empty()) fail(ErrorCode::kStructural, "ring needs at least one variable");
  if (names.size() > kMaxVariables) {
    fail(ErrorCode::kStructural,
         "too many variables (max " + std::to_string(kMaxVariables) + ")");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) fail(ErrorCode::kStructural, "duplicate variable " + names[i]);
    }
  }
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

RingPtr AmbientRing::make(std::vector<std::string> variables, Field field,
                          const std::vector<std::string>& relations) {
  validate_names(variables);
  RingSignature sig{variables.size(), field, TermOrder::grevlex()};
  std::vector<Polynomial> polys;
  polys.reserve(relations.size());
  for (const std::string& r : relations) polys.push_back(parse_polynomial(r, variables, sig));
  return from_polynomials(std::move(variables), field, std::move(polys));
}

RingPtr AmbientRing::from_polynomials(std::vector<std::string> variables, Field field,
                                      std::vector<Polynomial> relations) {
  validate_names(variables);
  auto ring = std::shared_ptr<AmbientRing>(new AmbientRing());
  ring->variables_ = std::move(variables);
  ring->sig_ = RingSignature{ring->variables_.size(), field, TermOrder::grevlex()};
  for (Polynomial& r : relations) {
    if (!(r.signature() == ring->sig_)) r = change_field(r, ring->sig_);
    if (r.is_zero()) continue;
    if (!r.coefficient(Monomial(ring->sig_.nvars)).is_zero()) {
      fail(ErrorCode::kStructural, "relation " + ring->format(r) +
                                       " has a nonzero constant term; q must lie in m");
    }
    ring->relations_monomial_ = ring->relations_monomial_ && r.is_monomial();
    ring->relations_.push_back(r.monic());
  }
  ring->relation_basis_ = reduced_groebner_basis(ring->relations_);
  return ring;
}

Polynomial AmbientRing::parse(std::string_view text) const {
  return parse_polynomial(text, variables_, sig_);
}

std::vector<Polynomial> AmbientRing::parse_list(std::string_view text) const {
  std::vector<Polynomial> out;
  if (blank(text)) return out;
  for (std::string_view part : split_top_level(text)) out.push_back(parse(part));
  return out;
}

std::string AmbientRing::format(const Polynomial& f) const { return format_polynomial(f, variables_); }

Polynomial AmbientRing::variable(std::size_t index) const {
  if (index >= nvars()) fail(ErrorCode::kStructural, "variable index out of range");
  return Polynomial::variable(sig_, index);
}

Polynomial AmbientRing::reduce(const Polynomial& f) const {
  if (relation_basis_.empty()) return f;
  return normal_form(f, relation_basis_);
}

std::size_t AmbientRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  fail(ErrorCode::kStructural, "unknown variable " + std::string(name));
}

RingPtr AmbientRing::with_relations(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> rel = relations_;
  rel.insert(rel.end(), extra.begin(), extra.end());
  return from_polynomials(variables_, sig_.field, std::move(rel));
}

RingPtr AmbientRing::with_field(Field field) const {
  RingSignature target{nvars(), field, sig_.order};
  std::vector<Polynomial> rel;
  for (const Polynomial& r : relations_) rel.push_back(change_field(r, target));
  return from_polynomials(variables_, field, std::move(rel));
}

std::string AmbientRing::describe() const {
  std::string out = sig_.field.name() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i > 0) out += ",";
    out += variables_[i];
  }
  out += "]";
  if (!relations_.empty()) {
    out += " mod (";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i > 0) out += ", ";
      out += format(relations_[i]);
    }
    out += ")";
  }
  return out;
}

Polynomial change_field(const Polynomial& f, const RingSignature& target) {
  if (f.signature().nvars != target.nvars) {
    fail(ErrorCode::kStructural, "variable count mismatch in field change");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    terms.push_back(Term{Scalar::from_rational(t.coeff.to_rational(), target.field), t.mono});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

bool is_weighted_homogeneous(const Polynomial& f, const std::vector<long>& weights) {
  if (f.size() <= 1) return true;
  auto weight = [&](const Monomial& m) {
    long w = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) w += weights[i] * static_cast<long>(m[i]);
    return w;
  };
  const long w0 = weight(f.terms().front().mono);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return weight(t.mono) == w0; });
}

std::optional<std::vector<long>> positive_grading(const std::vector<const Polynomial*>& polys,
                                                  std::size_t nvars) {
  std::vector<long> ones(nvars, 1);
  bool standard = std::all_of(polys.begin(), polys.end(), [&](const Polynomial* p) {
    return is_weighted_homogeneous(*p, ones);
  });
  if (standard) return ones;

  // Rows: exponent differences that a grading must annihilate.
  std::vector<std::vector<mpq_class>> rows;
  for (const Polynomial* p : polys) {
    if (p->size() <= 1) continue;
    const Monomial& m0 = p->terms().front().mono;
    for (std::size_t k = 1; k < p->size(); ++k) {
      const Monomial& mk = p->terms()[k].mono;
      std::vector<mpq_class> row(nvars);
      for (std::size_t i = 0; i < nvars; ++i) {
        row[i] = static_cast<long>(m0[i]) - static_cast<long>(mk[i]);
      }
      rows.push_back(std::move(row));
    }
  }
  // Reduced row echelon form, then read off a nullspace basis.
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    mpq_class inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c];
      for (std::size_t j = 0; j < nvars; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < nvars; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<mpq_class> v(nvars, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  auto to_weights = [&](const std::vector<mpq_class>& v) -> std::optional<std::vector<long>> {
    mpz_class den = 1;
    for (const auto& x : v) {
      if (x <= 0) return std::nullopt;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<long> w;
    for (const auto& x : v) {
      mpq_class s = x * den;
      if (!s.get_num().fits_slong_p()) return std::nullopt;
      w.push_back(s.get_num().get_si());
    }
    long g = 0;
    for (long x : w) g = std::gcd(g, x);
    for (long& x : w) x /= g;
    return w;
  };
  for (const auto& b : basis) {
    if (auto w = to_weights(b)) return w;
    std::vector<mpq_class> neg(b);
    for (auto& x : neg) x = -x;
    if (auto w = to_weights(neg)) return w;
  }
  if (basis.size() > 1) {
    std::vector<mpq_class> sum(nvars, 0);
    for (const auto& b : basis) {
      for (std::size_t i = 0; i < nvars; ++i) sum[i] += b[i];
    }
    if (auto w = to_weights(sum)) return w;
  }
  return std::nullopt;
}

}  // namespace fibrant
