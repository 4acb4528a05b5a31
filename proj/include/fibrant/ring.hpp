#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibrant/polynomial.hpp"

namespace fibrant {

class AmbientRing;
using RingPtr = std::shared_ptr<const AmbientRing>;

/// A polynomial ring k[x_1..x_n] modulo a fixed ideal q contained in the
/// maximal ideal m = (x_1..x_n), read locally at the origin.
class AmbientRing {
 public:
  static RingPtr make(std::vector<std::string> variables, Field field,
                      const std::vector<std::string>& relations = {});
  static RingPtr from_polynomials(std::vector<std::string> variables, Field field,
                                  std::vector<Polynomial> relations);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  Field field() const { return sig_.field; }
  const RingSignature& signature() const { return sig_; }

  /// Generators of q as given (normalized, nonzero).
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Reduced Groebner basis of q.
  const std::vector<Polynomial>& relation_basis() const { return relation_basis_; }
  bool is_free() const { return relations_.empty(); }
  bool relations_monomial() const { return relations_monomial_; }

  Polynomial parse(std::string_view text) const;
  std::vector<Polynomial> parse_list(std::string_view text) const;
  std::string format(const Polynomial& f) const;
  Polynomial variable(std::size_t index) const;
  Polynomial zero() const { return Polynomial(sig_); }
  Polynomial one() const { return Polynomial::constant(sig_, 1); }
  /// Normal form modulo q.
  Polynomial reduce(const Polynomial& f) const;
  /// Index of a named variable; throws kStructural when unknown.
  std::size_t variable_index(std::string_view name) const;

  /// Same variables with q replaced by q + extra.
  RingPtr with_relations(const std::vector<Polynomial>& extra) const;
  /// Same presentation over another coefficient field.
  RingPtr with_field(Field field) const;

  /// "QQ[x,y] mod (x*y)" style description.
  std::string describe() const;

 private:
  AmbientRing() = default;

  std::vector<std::string> variables_;
  RingSignature sig_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> relation_basis_;
  bool relations_monomial_ = true;
};

/// Moves f into `target` (same variable count), mapping coefficients exactly.
Polynomial change_field(const Polynomial& f, const RingSignature& target);

/// Positive integer weights making every polynomial in `polys` homogeneous,
/// when such a grading is found. All-ones is tried first.
std::optional<std::vector<long>> positive_grading(const std::vector<const Polynomial*>& polys,
                                                  std::size_t nvars);
bool is_weighted_homogeneous(const Polynomial& f, const std::vector<long>& weights);

}  // namespace fibrant
