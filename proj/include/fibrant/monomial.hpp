#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fibrant {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::uint32_t kMaxExponent = 0xffff;

/// Exponent vector of a power product in at most kMaxVariables variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<std::uint32_t> exps);
  static Monomial from_exponents(std::span<const std::uint32_t> exps);
  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const { return nvars_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::vector<std::uint32_t> exponents() const;

  /// Bitmask of variables with positive exponent; cheap divisibility filter.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint32_t k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  /// Fixed lexicographic comparison of exponent vectors; only for containers.
  friend bool lex_less(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  void set(std::size_t i, std::uint32_t e);

  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// a / b when b divides a componentwise.
std::optional<Monomial> monomial_divrem(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of ((a) : b).
Monomial monomial_colon(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

enum class OrderKind : std::uint8_t { kGrevlex, kLex, kElimination };

/// Term order. kElimination compares the first `split` variables by grevlex,
/// then breaks ties by grevlex on the remaining block.
struct TermOrder {
  OrderKind kind = OrderKind::kGrevlex;
  std::uint8_t split = 0;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {OrderKind::kLex, 0}; }
  static TermOrder elimination(std::size_t split) {
    return {OrderKind::kElimination, static_cast<std::uint8_t>(split)};
  }

  std::string name() const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const TermOrder& ord);

}  // namespace fibrant
