#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibrant/ideal.hpp"
#include "fibrant/invariants.hpp"
#include "fibrant/linalg.hpp"
#include "fibrant/reductions.hpp"

namespace fibrant {

/// 0 -> X_top -> ... -> X_0 -> 0 over k. maps[i] is d_{i+1}: X_{i+1} -> X_i,
/// stored with rows indexed by X_i and columns by X_{i+1}.
struct FiniteComplex {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<Matrix> maps;
  std::vector<std::size_t> homology;
  std::vector<std::string> notes;
};

/// Fills homology by rank-nullity.
void compute_homology(FiniteComplex& c);
/// d o d = 0 and the Euler identity; kInternalInconsistency otherwise.
bool euler_check(const FiniteComplex& c);

/// C.(I^n) for J = (x1, x2): 0 -> A/m -> (I^n/mI^n)^2 -> I^n J^[n] / m I^n J^[n] -> 0.
FiniteComplex build_complex_C(const IdealHandle& i, const IdealHandle& j, std::uint32_t n);
/// D.(I^n) for J = (x1, x2, x3), the four-term complex built on I^n and I^{2n}.
FiniteComplex build_complex_D(const IdealHandle& i, const IdealHandle& j, std::uint32_t n);

struct ResolutionData {
  std::uint32_t n = 0;
  std::size_t beta0 = 0;
  std::size_t beta1 = 0;
  std::vector<std::uint32_t> alphas;  // ascending
  bool kernel_present = false;
  std::vector<std::size_t> s_dims;    // dim S_j for j = 0.. computed degrees
};

/// Minimal resolution of F(I^n) over F(J^[n]) = k[X1^n, X2^n] for l(I) = 2,
/// read off S = F(I^n)/(x1^n)F(I^n) as a graded k[X2^n]-module.
ResolutionData fiber_resolution(const IdealHandle& i, const IdealHandle& j, std::uint32_t n,
                                const HilbertData& fiber_of_i);

struct HypothesisRow {
  std::string name;
  Verdict status = Verdict::kInconclusive;
  std::string window;
  std::string detail;
};

struct Conclusion {
  std::string statement;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

struct TheoremReport {
  std::string theorem;
  std::vector<HypothesisRow> hypotheses;
  Conclusion conclusion;
  std::vector<std::int64_t> coefficients;
  std::vector<ResolutionData> resolutions;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::uint32_t nmax = 12;
  std::uint32_t window_lo = 1;
  std::uint32_t window_hi = 6;
  std::uint32_t red_bound = 10;
  /// Elements whose initial forms should be G(I)-regular (depth evidence).
  std::vector<Polynomial> depth_sequence;
  /// Extra candidates for the grade search, tried after J's generators.
  std::vector<Polynomial> grade_candidates;
};

/// Inequality f1 <= f0 - 1 for l(I) = 2 with its hypotheses and the resolution data.
TheoremReport check_theorem_l2(const IdealHandle& i, const IdealHandle& j, const CheckOptions& opts);
/// Inequality f2 >= f1 - f0 + 1 for l(I) = 3, naming the failed hypothesis pattern.
TheoremReport check_theorem_l3(const IdealHandle& i, const IdealHandle& j, const CheckOptions& opts);
/// Cuts I by a Rees-superficial regular sequence xs and compares f_i(I/(xs))
/// with f_i(I) for i <= l(I) - 2, then checks the smaller case.
TheoremReport check_higher_spread(const IdealHandle& i, const IdealHandle& j, const std::vector<Polynomial>& xs,
                                  const CheckOptions& opts);

}  // namespace fibrant
