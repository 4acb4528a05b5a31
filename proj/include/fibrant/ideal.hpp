#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibrant/groebner.hpp"
#include "fibrant/ring.hpp"

namespace fibrant {

/// An ideal of an AmbientRing given by generators. Copies share one state,
/// whose Groebner basis and power caches fill at most once under a lock.
class IdealHandle {
 public:
  IdealHandle() = default;
  /// Generators are reduced modulo q, made monic and deduplicated; zeros drop.
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);
  static IdealHandle parse(RingPtr ring, std::string_view list);

  const RingPtr& ring_ptr() const;
  const AmbientRing& ring() const { return *ring_ptr(); }
  const std::vector<Polynomial>& generators() const;

  bool is_zero() const { return generators().empty(); }
  bool is_monomial() const;
  /// Monomial generators over a monomial q: combinatorial algorithms apply.
  bool monomial_path() const;
  /// Positive weights grading every generator and every relation, if any.
  const std::optional<std::vector<long>>& grading() const;

  /// Reduced Groebner basis of generators + q in the ambient polynomial ring.
  const std::vector<Polynomial>& groebner_basis() const;
  /// Minimal monomial generators of the lifted ideal I + q (monomial path only).
  const std::vector<Monomial>& lifted_monomials() const;
  Polynomial normal_form(const Polynomial& f) const;
  /// f in I + q inside the polynomial ring (no localization).
  bool contains_polynomially(const Polynomial& f) const;

  /// I^n, with n = 0 the unit ideal; cached, built by squaring.
  IdealHandle power(std::uint32_t n) const;

  std::string to_string() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

IdealHandle maximal_ideal(const RingPtr& ring);
IdealHandle unit_ideal(const RingPtr& ring);
IdealHandle zero_ideal(const RingPtr& ring);
/// (f_1^n, ..., f_k^n) for the generators f_i of J.
IdealHandle bracket_power(const IdealHandle& j, std::uint32_t n);

std::vector<Polynomial> groebner_basis(const IdealHandle& i);
Polynomial normal_form(const Polynomial& f, const IdealHandle& i);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, std::uint32_t n);
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_quotient(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_quotient(const IdealHandle& a, const Polynomial& f);
/// (I : f^infinity), iterating quotients until the chain stops.
IdealHandle saturation(const IdealHandle& a, const Polynomial& f);

/// Local membership at the origin: f in I A_m.
bool membership(const Polynomial& f, const IdealHandle& i);
/// Local containment b A_m inside a A_m.
bool ideal_contains(const IdealHandle& a, const IdealHandle& b);
bool ideal_equals(const IdealHandle& a, const IdealHandle& b);
/// Equality of the ideals I + q in the polynomial ring.
bool ideal_equals_polynomially(const IdealHandle& a, const IdealHandle& b);
/// A generator of b outside a A_m, when one exists.
std::optional<Polynomial> containment_witness(const IdealHandle& a, const IdealHandle& b);

/// Generators of m * I.
IdealHandle maximal_times(const IdealHandle& i);

}  // namespace fibrant
