#include "fibrant/invariants.hpp"

#include "fibrant/errors.hpp"
#include "fibrant/localring.hpp"

namespace fibrant {

namespace {

constexpr std::size_t kTailPoints = 3;

// binom(x, k) for any integer x, as the polynomial x(x-1)...(x-k+1)/k!.
std::int64_t binom(std::int64_t x, std::int64_t k) {
  if (k < 0) return 0;
  __int128 num = 1;
  for (std::int64_t i = 0; i < k; ++i) num = num * (x - i) / (i + 1);
  return static_cast<std::int64_t>(num);
}

void check_nmax(std::uint32_t nmax) {
  if (nmax < 4) fail(ErrorCode::kStructural, "nmax must be at least 4");
}

HilbertData require_form(HilbertData h, const std::string& what) {
  if (!h.rational_form) {
    fail(ErrorCode::kNoStabilization,
         what + ": no rational form visible through n = " + std::to_string(h.nmax()));
  }
  return h;
}

void require_primary(const IdealHandle& i, const char* op) {
  if (!colength(i).is_finite()) fail(ErrorCode::kNotPrimary, std::string(op) + ": " + i.to_string() + " is not m-primary");
}

}  // namespace

std::string RationalForm::to_string() const {
  std::string num;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    std::int64_t c = numerator[k];
    if (c == 0) continue;
    std::int64_t a = c < 0 ? -c : c;
    if (num.empty()) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    if (k == 0 || a != 1) num += std::to_string(a);
    if (k > 0) num += k == 1 ? "z" : "z^" + std::to_string(k);
  }
  if (num.empty()) num = "0";
  if (denom_exp == 0) return num;
  std::string den = denom_exp == 1 ? "(1 - z)" : "(1 - z)^" + std::to_string(denom_exp);
  return "(" + num + ")/" + den;
}

const RationalForm& HilbertData::form() const {
  if (!rational_form) fail(ErrorCode::kMissingRationalForm, "Hilbert data has no rational form");
  return *rational_form;
}

std::optional<RationalForm> infer_rational_form(const std::vector<std::int64_t>& values) {
  const std::size_t len = values.size();
  std::vector<std::int64_t> c = values;
  // c holds (1 - z)^l times the truncated series; raise l until its tail vanishes.
  for (std::uint32_t l = 0; l < len; ++l) {
    std::size_t top = len;
    while (top > 0 && c[top - 1] == 0) --top;
    if (len - top >= kTailPoints) {
      std::vector<std::int64_t> h(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(top));
      std::int64_t at_one = 0;
      for (std::int64_t x : h) at_one += x;
      if (at_one != 0 || h.empty()) return RationalForm{std::move(h), l};
    }
    for (std::size_t k = len; k-- > 1;) c[k] -= c[k - 1];
  }
  return std::nullopt;
}

std::int64_t series_coefficient(const RationalForm& r, std::uint32_t n) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < r.numerator.size() && k <= n; ++k) {
    if (r.denom_exp == 0) {
      if (k == n) sum += r.numerator[k];
    } else {
      sum += r.numerator[k] * binom(static_cast<std::int64_t>(n - k + r.denom_exp - 1), r.denom_exp - 1);
    }
  }
  return sum;
}

HilbertData make_hilbert_data(std::vector<std::int64_t> values) {
  HilbertData out;
  out.values = std::move(values);
  out.rational_form = infer_rational_form(out.values);
  if (!out.rational_form) return out;
  CoefficientVector f = extract_coefficients(out, CoefficientKind::kFiber);
  std::uint32_t n0 = out.nmax() + 1;
  while (n0 > 0 && evaluate_polynomial(f, n0 - 1) == out.values[n0 - 1]) --n0;
  out.stabilization_degree = n0;
  for (std::uint32_t n = 0; n <= out.nmax(); ++n) {
    if (series_coefficient(*out.rational_form, n) != out.values[n]) {
      fail(ErrorCode::kInternalInconsistency, "rational form does not reproduce the table");
    }
  }
  return out;
}

CoefficientVector extract_coefficients(const HilbertData& h, CoefficientKind kind) {
  const RationalForm& r = h.form();
  CoefficientVector out;
  out.kind = kind;
  // In both kinds the i-th coefficient is h^(i)(1)/i!, one per pole order.
  for (std::uint32_t i = 0; i < r.denom_exp; ++i) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < r.numerator.size(); ++k) s += binom(static_cast<std::int64_t>(k), i) * r.numerator[k];
    out.entries.push_back(s);
  }
  return out;
}

std::int64_t evaluate_polynomial(const CoefficientVector& c, std::int64_t n) {
  // Fiber: sum (-1)^i f_i binom(n+l-1-i, l-1-i) with l entries.
  // Hilbert-Samuel: sum (-1)^i e_i binom(n+d-i, d-i) with d+1 entries.
  const auto len = static_cast<std::int64_t>(c.entries.size());
  const std::int64_t top = len - 1;
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < len; ++i) {
    std::int64_t term = c.entries[static_cast<std::size_t>(i)] * binom(n + top - i, top - i);
    sum += i % 2 == 0 ? term : -term;
  }
  return sum;
}

HilbertData fiber_hilbert(const IdealHandle& i, std::uint32_t nmax) {
  check_nmax(nmax);
  std::vector<std::int64_t> v;
  for (std::uint32_t n = 0; n <= nmax; ++n) v.push_back(static_cast<std::int64_t>(min_gens(i.power(n))));
  return require_form(make_hilbert_data(std::move(v)), "fiber series of " + i.to_string());
}

HilbertData fiber_hilbert(const SemigroupIdeal& i, std::uint32_t nmax) {
  check_nmax(nmax);
  std::vector<std::int64_t> v;
  SemigroupIdeal p = sg_unit_ideal(i.semigroup());
  for (std::uint32_t n = 0; n <= nmax; ++n) {
    v.push_back(static_cast<std::int64_t>(sg_mu(p)));
    p = sg_ideal_product(p, i);
  }
  return require_form(make_hilbert_data(std::move(v)), "fiber series of " + i.to_string());
}

HilbertData hilbert_samuel(const IdealHandle& i, std::uint32_t nmax) {
  check_nmax(nmax);
  require_primary(i, "hilbert_samuel");
  std::vector<std::int64_t> v;
  for (std::uint32_t n = 0; n <= nmax; ++n) v.push_back(static_cast<std::int64_t>(colength(i.power(n + 1)).value()));
  return require_form(make_hilbert_data(std::move(v)), "Hilbert-Samuel function of " + i.to_string());
}

std::vector<std::int64_t> assoc_values(const IdealHandle& i, std::uint32_t nmax) {
  require_primary(i, "assoc_hilbert");
  std::vector<std::int64_t> v;
  std::int64_t prev = 0;
  for (std::uint32_t n = 0; n <= nmax; ++n) {
    auto c = static_cast<std::int64_t>(colength(i.power(n + 1)).value());
    v.push_back(c - prev);
    prev = c;
  }
  return v;
}

HilbertData assoc_hilbert(const IdealHandle& i, std::uint32_t nmax) {
  check_nmax(nmax);
  return require_form(make_hilbert_data(assoc_values(i, nmax)), "associated graded series of " + i.to_string());
}

std::uint32_t analytic_spread(const IdealHandle& i, std::uint32_t nmax) {
  return fiber_hilbert(i, nmax).form().denom_exp;
}

HilbertData veronese(const HilbertData& h, std::uint32_t n) {
  if (n == 0) fail(ErrorCode::kStructural, "veronese degree must be positive");
  std::vector<std::int64_t> v;
  if (h.rational_form) {
    // Past n0 the rational form extends the table exactly.
    for (std::uint32_t j = 0; j <= h.nmax(); ++j) {
      std::uint32_t d = n * j;
      v.push_back(d <= h.nmax() ? h.values[d] : series_coefficient(*h.rational_form, d));
    }
  } else {
    for (std::uint32_t d = 0; d <= h.nmax(); d += n) v.push_back(h.values[d]);
    if (v.size() < 5) {
      fail(ErrorCode::kInsufficientDepth, "veronese: table through " + std::to_string(h.nmax()) +
                                              " is too short for degree " + std::to_string(n));
    }
  }
  return make_hilbert_data(std::move(v));
}

}  // namespace fibrant
