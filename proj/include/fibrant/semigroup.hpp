#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fibrant {

/// Numerical semigroup S = <a_1, ..., a_k> with gcd 1. The ring k[[t^a_i]]
/// has the monomial t^n exactly when n lies in S.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<std::uint32_t> generators);

  /// Minimal generators, ascending.
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  /// Least c with every n >= c in S.
  std::uint32_t conductor() const { return conductor_; }
  bool contains(long n) const;
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> gens_;
  std::uint32_t conductor_ = 0;
  std::vector<bool> below_conductor_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

/// Monomial ideal of k[[S]]: the union of e + S over its exponent generators.
class SemigroupIdeal {
 public:
  SemigroupIdeal(SemigroupPtr s, std::vector<std::uint32_t> exponents);

  const SemigroupPtr& semigroup() const { return s_; }
  /// Minimal exponent generators, ascending.
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  bool contains(long n) const;
  bool is_zero() const { return gens_.empty(); }
  std::string to_string() const;
  friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) {
    return a.s_ == b.s_ && a.gens_ == b.gens_;
  }

 private:
  SemigroupPtr s_;
  std::vector<std::uint32_t> gens_;
};

SemigroupIdeal sg_unit_ideal(const SemigroupPtr& s);
/// The maximal ideal: all positive elements of S.
SemigroupIdeal sg_maximal_ideal(const SemigroupPtr& s);
SemigroupIdeal sg_ideal_product(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal sg_ideal_power(const SemigroupIdeal& a, std::uint32_t n);
SemigroupIdeal sg_intersection(const SemigroupIdeal& a, const SemigroupIdeal& b);
bool sg_membership(long n, const SemigroupIdeal& a);
/// dim_k I/mI, the number of minimal exponent generators.
std::size_t sg_mu(const SemigroupIdeal& a);

}  // namespace fibrant
