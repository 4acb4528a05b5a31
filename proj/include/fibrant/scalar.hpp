#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace fibrant {

/// Coefficient field: the rationals (modulus 0) or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint32_t modulus() const { return modulus_; }

  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// An exact field element: a reduced rational or a residue in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(long v, Field f);
  static Scalar from_rational(const mpq_class& q, Field f);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rational value; residues are returned as their representative in [0, p).
  mpq_class to_rational() const;
  /// Symmetric representative for prime fields, exact value for rationals.
  std::string to_string() const;

 private:
  std::uint32_t modulus_ = 0;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace fibrant
