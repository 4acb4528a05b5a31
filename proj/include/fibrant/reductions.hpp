#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibrant/ideal.hpp"
#include "fibrant/semigroup.hpp"

namespace fibrant {

enum class Verdict { kHolds, kFails, kInconclusive };
const char* to_string(Verdict v);

struct Evidence {
  std::string point;  // e.g. "n=3" or "r=2,s=1"
  bool pass = false;
  std::string detail;
};

/// Outcome of a windowed test. Asymptotic claims never reach past `window`.
struct VerdictReport {
  Verdict status = Verdict::kInconclusive;
  std::string window;
  std::vector<Evidence> evidence;
  std::optional<std::string> witness;
  std::string note;
};

/// J I^n = I^{n+1} in A_m, for J inside I (Nakayama: compared in I^{n+1}/mI^{n+1}).
bool reduces_at(const IdealHandle& j, const IdealHandle& i, std::uint32_t n);

struct ReductionRecord {
  IdealHandle j;
  std::uint32_t red = 0;
  /// Last n at which J I^n = I^{n+1} was confirmed (red + 2).
  std::uint32_t verified_through = 0;
  std::uint32_t trials = 1;
};

/// Least n <= bound with J I^n = I^{n+1}; kNotAReductionWithinBound otherwise.
ReductionRecord reduction_number(const IdealHandle& j, const IdealHandle& i, std::uint32_t bound = 10);
/// J spanned by `spread` random combinations of the generators of I with
/// coefficients in {+-1..+-5}. kSearchExhausted after `trials` failures.
ReductionRecord find_minimal_reduction(const IdealHandle& i, std::uint64_t seed, std::uint32_t trials = 8,
                                       std::uint32_t bound = 10,
                                       std::optional<std::uint32_t> spread = std::nullopt);

struct AsymptoticReduction {
  std::optional<std::uint32_t> value;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> per_n;  // (n, red_{J^[n]}(I^n))
  VerdictReport report;
};

/// red_{J^[n]}(I^n) over n in [lo, hi]; the value is reported once the last
/// three window points agree.
AsymptoticReduction asymptotic_reduction_number(const IdealHandle& i, const IdealHandle& j, std::uint32_t lo,
                                                std::uint32_t hi, std::uint32_t bound = 10);

enum class ASign { kNegative, kNonnegative, kInconclusive };
const char* to_string(ASign s);

struct ASignResult {
  ASign sign = ASign::kInconclusive;
  std::uint32_t spread = 0;
  std::optional<std::uint32_t> asymptotic_red;
  VerdictReport report;
};

/// Sign of a(I) from the stabilized red_{J^[n]}(I^n): l-1 means negative, l nonnegative.
ASignResult a_invariant_sign(const IdealHandle& i, const IdealHandle& j, std::uint32_t spread, std::uint32_t lo,
                             std::uint32_t hi, std::uint32_t bound = 10);

/// Sign of a(I) for m-primary I from a single power. With r = red_J(I) and
/// depth G(I) >= depth_lower, every a_i(I^n) is at most 0 once n exceeds the
/// bounds a_i(I) <= r - i (and a_{d-1} < a_d when depth_lower >= d - 1), so
/// red_{J^[n]}(I^n) <= d - 1 exactly when a(I) < 0.
ASignResult a_invariant_sign_certified(const IdealHandle& i, const IdealHandle& j, std::uint32_t red_j,
                                       std::uint32_t depth_lower);
/// The power used by a_invariant_sign_certified.
std::uint32_t decisive_power(std::uint32_t red_j, std::uint32_t dim, std::uint32_t depth_lower);

/// x_1..x_k is a regular sequence of A_m.
bool is_regular_sequence(const std::vector<Polynomial>& xs, const RingPtr& ring);

struct GradeEvidence {
  std::vector<Polynomial> sequence;  // regular sequence found inside I
  std::uint32_t lower = 0;
  bool exact = false;                // ((x) : I) != (x) certifies grade = lower
  std::optional<Polynomial> witness; // element of ((x) : I) outside (x)
};

/// Greedy regular sequence from `candidates` (default: generators of I).
GradeEvidence grade_evidence(const IdealHandle& i, std::vector<Polynomial> candidates = {});

/// x* regular on G(I/(x_1..x_{k-1})) for each k, via
/// H(G(I/(x_1..x_k))) = (1 - z)^k H(G(I)) on degrees 0..nmax.
VerdictReport graded_regular_sequence(const IdealHandle& i, const std::vector<Polynomial>& xs, std::uint32_t nmax);

/// (x) meets I^r m^s in x I^{r-1} m^s for r0 <= r <= rmax, 0 <= s <= smax.
VerdictReport is_rees_superficial(const Polynomial& x, const IdealHandle& i, std::uint32_t r0, std::uint32_t rmax,
                                  std::uint32_t smax);
/// (I^{n+1} : x) meets I^lo in I^n for lo <= n <= hi.
VerdictReport is_superficial(const Polynomial& x, const IdealHandle& i, std::uint32_t lo, std::uint32_t hi);
/// (m I^{j+1} : x) meets I^j in m I^j for lo <= j <= hi; HOLDS on a passing tail of three.
VerdictReport is_filter_regular(const Polynomial& x, const IdealHandle& i, std::uint32_t lo, std::uint32_t hi);
/// The filter-regular test for x^n on I^n.
VerdictReport power_filter_regular_transfer(const Polynomial& x, const IdealHandle& i, std::uint32_t n,
                                            std::uint32_t lo, std::uint32_t hi);
/// I^n meets J in J I^{n-1} for lo <= n <= hi.
VerdictReport valabrega_valla(const IdealHandle& j, const IdealHandle& i, std::uint32_t lo, std::uint32_t hi);
VerdictReport valabrega_valla(const SemigroupIdeal& j, const SemigroupIdeal& i, std::uint32_t lo,
                              std::uint32_t hi);
/// I^{2n} meets J^[n] in J^[n] I^n for lo <= n <= hi.
VerdictReport v2_infinity(const IdealHandle& i, const IdealHandle& j, std::uint32_t lo, std::uint32_t hi);

struct RatliffRush {
  IdealHandle closure;
  std::uint32_t stabilized_at = 0;
};
/// Union of (I^{n+1} : I^n), stopped at two consecutive equal terms.
RatliffRush ratliff_rush(const IdealHandle& i, std::uint32_t bound = 10);

}  // namespace fibrant
