#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fibrant/polynomial.hpp"

namespace fibrant {

/// Limits on a single Buchberger run. Exceeding one raises kResourceLimit.
struct GroebnerBudget {
  std::size_t max_pairs = 200000;
  std::size_t max_generators = 20000;

  /// Defaults, with FIBRANT_MAX_PAIRS overriding max_pairs when set.
  static GroebnerBudget from_environment();
};

/// Reduced Groebner basis of the ideal generated by `gens` (all in one
/// signature). Output is monic and sorted by descending leading monomial,
/// so equal ideals give identical vectors.
std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens,
                                               const GroebnerBudget& budget);
std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens);

/// Fully reduced remainder of f modulo `basis` (need not be a Groebner basis).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

namespace monomial_ideal {

/// Minimal generators, sorted by the fixed exponent-vector order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);
bool contains(std::span<const Monomial> gens, const Monomial& m);
/// gens(a) contained in ideal(b).
bool is_subset(std::span<const Monomial> a, std::span<const Monomial> b);
std::vector<Monomial> sum(std::span<const Monomial> a, std::span<const Monomial> b);
std::vector<Monomial> product(std::span<const Monomial> a, std::span<const Monomial> b);
std::vector<Monomial> power(std::span<const Monomial> a, std::uint32_t n, std::size_t nvars);
std::vector<Monomial> intersection(std::span<const Monomial> a, std::span<const Monomial> b);
std::vector<Monomial> quotient(std::span<const Monomial> a, const Monomial& m);
std::vector<Monomial> quotient(std::span<const Monomial> a, std::span<const Monomial> b);
/// Number of monomials outside the ideal; nullopt when infinite.
std::optional<std::size_t> count_standard(std::span<const Monomial> gens, std::size_t nvars);
/// The standard monomials themselves (finite case only), in exponent order.
std::vector<Monomial> standard_monomials(std::span<const Monomial> gens, std::size_t nvars);

}  // namespace monomial_ideal

/// While alive, monomial input on this thread takes the general Buchberger
/// path instead of the combinatorial one. Used to cross-check the two.
class GeneralPathScope {
 public:
  GeneralPathScope();
  ~GeneralPathScope();
  GeneralPathScope(const GeneralPathScope&) = delete;
  GeneralPathScope& operator=(const GeneralPathScope&) = delete;

 private:
  bool previous_;
};

bool general_path_forced();

}  // namespace fibrant
