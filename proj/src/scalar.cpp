#include "fibrant/scalar.hpp"

#include "fibrant/errors.hpp"

namespace fibrant {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

void check_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorCode::kStructural, "scalar field mismatch: " + a.field().name() +
                                     " vs " + b.field().name());
  }
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > 0x7fffffffU) {
    fail(ErrorCode::kStructural, "field modulus must be a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "FP(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::zero(Field f) { return from_int(0, f); }
Scalar Scalar::one(Field f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, Field f) {
  Scalar s;
  s.modulus_ = f.modulus();
  if (f.is_rational()) {
    s.value_ = mpq_class(v);
  } else {
    s.value_ = reduce(mpz_class(v), f.modulus());
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q, Field f) {
  Scalar s;
  s.modulus_ = f.modulus();
  if (f.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    s.value_ = std::move(c);
    return s;
  }
  std::uint32_t num = reduce(q.get_num(), f.modulus());
  std::uint32_t den = reduce(q.get_den(), f.modulus());
  if (den == 0) {
    fail(ErrorCode::kStructural, "denominator vanishes modulo " + std::to_string(f.modulus()));
  }
  s.value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(num) *
                                        pow_mod(den, f.modulus() - 2, f.modulus()) %
                                        f.modulus());
  return s;
}

Field Scalar::field() const {
  return Field(modulus_);
}

bool Scalar::is_zero() const {
  if (modulus_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.value_ = mpq_class(-std::get<mpq_class>(value_));
  } else {
    std::uint32_t r = std::get<std::uint32_t>(value_);
    s.value_ = r == 0 ? 0U : modulus_ - r;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorCode::kStructural, "division by zero scalar");
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  } else {
    s.value_ = pow_mod(std::get<std::uint32_t>(value_), modulus_ - 2, modulus_);
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) check_same_field(a, b);
  Scalar s;
  s.modulus_ = a.modulus_;
  if (a.modulus_ == 0) {
    s.value_ = mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_));
  } else {
    std::uint64_t v = static_cast<std::uint64_t>(std::get<std::uint32_t>(a.value_)) +
                      std::get<std::uint32_t>(b.value_);
    s.value_ = static_cast<std::uint32_t>(v % a.modulus_);
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) check_same_field(a, b);
  Scalar s;
  s.modulus_ = a.modulus_;
  if (a.modulus_ == 0) {
    s.value_ = mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_));
  } else {
    std::uint64_t v = static_cast<std::uint64_t>(std::get<std::uint32_t>(a.value_)) *
                      std::get<std::uint32_t>(b.value_);
    s.value_ = static_cast<std::uint32_t>(v % a.modulus_);
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.modulus_ == b.modulus_ && a.value_ == b.value_;
}

mpq_class Scalar::to_rational() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_);
  return mpq_class(std::get<std::uint32_t>(value_));
}

std::string Scalar::to_string() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_).get_str();
  std::int64_t r = std::get<std::uint32_t>(value_);
  if (r > static_cast<std::int64_t>(modulus_ / 2)) r -= modulus_;
  return std::to_string(r);
}

}  // namespace fibrant
