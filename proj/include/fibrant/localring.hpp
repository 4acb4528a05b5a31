#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fibrant/ideal.hpp"
#include "fibrant/linalg.hpp"

namespace fibrant {

/// A k-dimension that may be infinite.
class LengthValue {
 public:
  static LengthValue finite(std::size_t v) { return LengthValue(v); }
  static LengthValue infinite() { return LengthValue(); }

  bool is_finite() const { return value_.has_value(); }
  /// Throws kStructural for INFINITE.
  std::size_t value() const;
  std::string to_string() const;
  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  LengthValue() = default;
  explicit LengthValue(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// dim_k A_m / U A_m.
LengthValue colength(const IdealHandle& u);
/// Minimal number of generators of U A_m, i.e. dim_k U/mU.
std::size_t min_gens(const IdealHandle& u);
/// dim_k U/V for V inside U (locally); kContainment otherwise.
LengthValue quotient_dim(const IdealHandle& u, const IdealHandle& v);
/// U A_m is m-primary (or the unit ideal).
bool is_locally_primary(const IdealHandle& u);

/// The k-space U/mU with a basis of minimal generators of U and exact
/// coordinates for classes of elements of U.
class FiberSpace {
 public:
  explicit FiberSpace(const IdealHandle& u);

  const IdealHandle& ideal() const { return u_; }
  std::size_t dimension() const { return basis_.size(); }
  /// Minimal generators of U, picked greedily in generator order.
  const std::vector<Polynomial>& basis() const { return basis_; }
  /// Coordinates of the class of f; f must lie in U.
  std::vector<Scalar> coordinates(const Polynomial& f) const;
  /// Rank of the span of the classes of `elems` (all in U).
  std::size_t image_rank(const std::vector<Polynomial>& elems) const;

 private:
  IdealHandle u_;
  bool monomial_ = false;
  std::vector<Polynomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Monomial> lifted_;
  std::vector<Monomial> relation_lms_;
  std::vector<Polynomial> mu_basis_;
  std::optional<LinearBasis> span_;
};

}  // namespace fibrant
