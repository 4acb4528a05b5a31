#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibrant/monomial.hpp"
#include "fibrant/scalar.hpp"

namespace fibrant {

/// Variable count, coefficient field and term order shared by a family of
/// polynomials. Arithmetic across different signatures is a structural error.
struct RingSignature {
  std::size_t nvars = 0;
  Field field;
  TermOrder order;

  friend bool operator==(const RingSignature&, const RingSignature&) = default;
};

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Sparse polynomial in canonical form: terms strictly descending in the
/// signature's term order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const RingSignature& sig) : sig_(sig) {}

  static Polynomial constant(const RingSignature& sig, const Scalar& c);
  static Polynomial constant(const RingSignature& sig, long c);
  static Polynomial monomial(const RingSignature& sig, const Monomial& m);
  static Polynomial term(const RingSignature& sig, const Scalar& c, const Monomial& m);
  static Polynomial variable(const RingSignature& sig, std::size_t index);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(const RingSignature& sig, std::vector<Term> terms);

  const RingSignature& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coeff; }
  /// Maximum total degree of a term; 0 for the zero polynomial.
  std::uint32_t degree() const;
  /// Minimum total degree of a term (order at the origin).
  std::uint32_t low_degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t k) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// this - c * m * g, merged in one pass.
  void subtract_scaled(const Scalar& c, const Monomial& m, const Polynomial& g);

  /// Re-expresses the polynomial in a new signature; variable i moves to
  /// index var_map[i]. Coefficients must already live in the target field.
  Polynomial rebase(const RingSignature& target, std::span<const std::size_t> var_map) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void check_compatible(const Polynomial& g) const;
  void canonicalize();

  RingSignature sig_;
  std::vector<Term> terms_;
};

/// Quotient f / g when g divides f exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Parses infix text such as "3*x^2*y - y^3 + 1/2". Identifiers must be in
/// `names`; throws Error(kParse) with a column on failure.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const RingSignature& sig);
std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

}  // namespace fibrant
