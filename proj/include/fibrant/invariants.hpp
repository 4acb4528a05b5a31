#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibrant/ideal.hpp"
#include "fibrant/semigroup.hpp"

namespace fibrant {

/// h(z) / (1 - z)^denom_exp with h(1) != 0.
struct RationalForm {
  std::vector<std::int64_t> numerator;
  std::uint32_t denom_exp = 0;

  std::string to_string() const;
  friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

/// A Hilbert function tabulated on 0..nmax, with its rational series when the
/// table shows it.
struct HilbertData {
  std::vector<std::int64_t> values;
  std::optional<RationalForm> rational_form;
  /// Least tabulated n0 from which values follow the Hilbert polynomial.
  std::optional<std::uint32_t> stabilization_degree;

  std::uint32_t nmax() const { return static_cast<std::uint32_t>(values.size() - 1); }
  const RationalForm& form() const;
};

/// Minimal denominator exponent whose numerator has a zero tail of at least
/// three tabulated points; nullopt when none does.
std::optional<RationalForm> infer_rational_form(const std::vector<std::int64_t>& values);
/// Fills rational_form and stabilization_degree from the values.
HilbertData make_hilbert_data(std::vector<std::int64_t> values);

/// mu(I^n) for n = 0..nmax. Throws kNoStabilization when no rational form appears.
HilbertData fiber_hilbert(const IdealHandle& i, std::uint32_t nmax);
HilbertData fiber_hilbert(const SemigroupIdeal& i, std::uint32_t nmax);
/// dim I^n / I^{n+1}; kNotPrimary unless I is m-primary.
HilbertData assoc_hilbert(const IdealHandle& i, std::uint32_t nmax);
/// The table of assoc_hilbert without a rational form.
std::vector<std::int64_t> assoc_values(const IdealHandle& i, std::uint32_t nmax);
/// colength(I^{n+1}); kNotPrimary unless I is m-primary.
HilbertData hilbert_samuel(const IdealHandle& i, std::uint32_t nmax);

enum class CoefficientKind { kFiber, kHilbertSamuel };

struct CoefficientVector {
  CoefficientKind kind = CoefficientKind::kFiber;
  std::vector<std::int64_t> entries;
};

/// f_0..f_{l-1} from a fiber series, or e_0..e_d from a Hilbert-Samuel series.
CoefficientVector extract_coefficients(const HilbertData& h, CoefficientKind kind);
/// The Hilbert polynomial written in the binomial basis, evaluated at n.
std::int64_t evaluate_polynomial(const CoefficientVector& c, std::int64_t n);
/// Coefficient of z^n in the rational form.
std::int64_t series_coefficient(const RationalForm& r, std::uint32_t n);

std::uint32_t analytic_spread(const IdealHandle& i, std::uint32_t nmax = 12);
/// Hilbert function of the n-th Veronese: values(j) = H.values(n j).
HilbertData veronese(const HilbertData& h, std::uint32_t n);

}  // namespace fibrant
