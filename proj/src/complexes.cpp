#include "fibrant/complexes.hpp"

#include <algorithm>

#include "fibrant/errors.hpp"
#include "fibrant/localring.hpp"

namespace fibrant {

namespace {

void put_column(Matrix& m, std::size_t col, std::size_t row_offset, const std::vector<Scalar>& v) {
  for (std::size_t r = 0; r < v.size(); ++r) m.at(row_offset + r, col) = v[r];
}

std::vector<Scalar> negate(std::vector<Scalar> v) {
  for (Scalar& s : v) s = -s;
  return v;
}

void require_reduction(const IdealHandle& i, const IdealHandle& j, std::size_t gens) {
  if (j.generators().size() != gens) {
    fail(ErrorCode::kHypothesis, "J must have " + std::to_string(gens) + " generators, got " + j.to_string());
  }
  if (auto w = containment_witness(i, j)) {
    fail(ErrorCode::kHypothesis, "J is not inside I: " + i.ring().format(*w));
  }
  try {
    reduction_number(j, i);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotAReductionWithinBound) throw;
    fail(ErrorCode::kHypothesis, j.to_string() + " is not a reduction of " + i.to_string());
  }
}

std::size_t span_rank(const FiberSpace& space, const std::vector<Polynomial>& elems) {
  return elems.empty() ? 0 : space.image_rank(elems);
}

std::vector<Polynomial> times(const Polynomial& x, const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const Polynomial& b : basis) out.push_back(x * b);
  return out;
}

Verdict from_sign(ASign s) {
  switch (s) {
    case ASign::kNegative: return Verdict::kHolds;
    case ASign::kNonnegative: return Verdict::kFails;
    case ASign::kInconclusive: return Verdict::kInconclusive;
  }
  return Verdict::kInconclusive;
}

std::string join_evidence(const VerdictReport& r) {
  std::string out;
  for (const Evidence& e : r.evidence) {
    if (!out.empty()) out += "; ";
    out += e.point + ": " + e.detail;
  }
  if (r.witness) out += (out.empty() ? "" : "; ") + std::string("witness ") + *r.witness;
  if (!r.note.empty()) out += (out.empty() ? "" : "; ") + r.note;
  return out;
}

HypothesisRow grade_row(const IdealHandle& i, const IdealHandle& j, const CheckOptions& opts, std::uint32_t l) {
  std::vector<Polynomial> cands = j.generators();
  cands.insert(cands.end(), opts.grade_candidates.begin(), opts.grade_candidates.end());
  cands.insert(cands.end(), i.generators().begin(), i.generators().end());
  GradeEvidence g = grade_evidence(i, cands);
  HypothesisRow row{"grade(I) = " + std::to_string(l), Verdict::kInconclusive, "", ""};
  std::string seq;
  for (const Polynomial& x : g.sequence) seq += (seq.empty() ? "" : ", ") + i.ring().format(x);
  row.detail = "regular sequence (" + seq + ")";
  // grade(I) never exceeds l(I), so a regular sequence of length l settles it.
  if (g.lower >= l) {
    row.status = Verdict::kHolds;
    row.detail += ", grade = " + std::to_string(l);
  } else if (g.exact) {
    row.status = Verdict::kFails;
    row.detail += ", grade = " + std::to_string(g.lower) + " certified by " + i.ring().format(*g.witness) +
                  " in ((x) : I) outside (x)";
  } else {
    row.detail += ", grade >= " + std::to_string(g.lower + 1) + " not settled";
  }
  return row;
}

std::string cm_diagnosis(const RationalForm& r) {
  for (std::size_t k = 0; k < r.numerator.size(); ++k) {
    if (r.numerator[k] < 0) {
      return "F(I) is not Cohen-Macaulay: the numerator has coefficient " + std::to_string(r.numerator[k]) +
             " at z^" + std::to_string(k);
    }
  }
  return "the series does not decide whether F(I) is Cohen-Macaulay";
}

}  // namespace

void compute_homology(FiniteComplex& c) {
  const std::size_t len = c.dims.size();
  std::vector<std::size_t> ranks(len + 1, 0);  // ranks[i] = rank d_i, d_0 = d_{len} = 0
  for (std::size_t i = 1; i < len; ++i) ranks[i] = rank(c.maps[i - 1]);
  c.homology.assign(len, 0);
  for (std::size_t i = 0; i < len; ++i) c.homology[i] = c.dims[i] - ranks[i] - ranks[i + 1];
}

bool euler_check(const FiniteComplex& c) {
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
    if (!(c.maps[i] * c.maps[i + 1]).is_zero()) {
      fail(ErrorCode::kInternalInconsistency, "d o d != 0 at degree " + std::to_string(i + 1));
    }
  }
  std::int64_t spaces = 0;
  std::int64_t homology = 0;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const std::int64_t sign = i % 2 == 0 ? 1 : -1;
    spaces += sign * static_cast<std::int64_t>(c.dims[i]);
    homology += sign * static_cast<std::int64_t>(c.homology.at(i));
  }
  if (spaces != homology) fail(ErrorCode::kInternalInconsistency, "Euler characteristic mismatch");
  return true;
}

FiniteComplex build_complex_C(const IdealHandle& i, const IdealHandle& j, std::uint32_t n) {
  require_reduction(i, j, 2);
  const Polynomial x1 = j.generators()[0].pow(n);
  const Polynomial x2 = j.generators()[1].pow(n);
  const IdealHandle in = i.power(n);
  const FiberSpace src(in);
  const FiberSpace dst(ideal_product(in, bracket_power(j, n)));
  const std::size_t mu = src.dimension();
  const Field field = i.ring().field();

  FiniteComplex c;
  c.labels = {"I^nJ^[n]/mI^nJ^[n]", "(I^n/mI^n)^2", "A/m"};
  c.dims = {dst.dimension(), 2 * mu, 1};
  Matrix d1(c.dims[0], c.dims[1], field);
  for (std::size_t k = 0; k < mu; ++k) {
    put_column(d1, k, 0, dst.coordinates(x1 * src.basis()[k]));
    put_column(d1, mu + k, 0, dst.coordinates(x2 * src.basis()[k]));
  }
  Matrix d2(c.dims[1], 1, field);
  put_column(d2, 0, 0, negate(src.coordinates(x2)));
  put_column(d2, 0, mu, src.coordinates(x1));
  c.maps = {std::move(d1), std::move(d2)};
  compute_homology(c);
  if (c.homology[0] != 0) fail(ErrorCode::kInternalInconsistency, "C.: the last map is not surjective");
  if (c.homology[2] != 0) fail(ErrorCode::kHypothesis, "C.: x1^n, x2^n are not analytically independent");
  const std::int64_t r1 = 1 - 2 * static_cast<std::int64_t>(mu) + static_cast<std::int64_t>(c.dims[0]);
  if (r1 != -static_cast<std::int64_t>(c.homology[1])) {
    fail(ErrorCode::kInternalInconsistency, "C.: 1 - 2 mu(I^n) + mu(I^n J^[n]) != -dim H_1");
  }
  c.notes.push_back("1 - 2 mu(I^n) + mu(I^n J^[n]) = " + std::to_string(r1) + " = -dim H_1");
  const bool regular = is_regular_sequence({x1, x2}, i.ring_ptr());
  c.notes.push_back(std::string("x1^n, x2^n regular sequence: ") + (regular ? "yes" : "no"));
  if (regular && c.homology[1] != 0) {
    fail(ErrorCode::kInternalInconsistency, "C.: H_1 != 0 although x1^n, x2^n is a regular sequence");
  }
  return c;
}

FiniteComplex build_complex_D(const IdealHandle& i, const IdealHandle& j, std::uint32_t n) {
  require_reduction(i, j, 3);
  std::vector<Polynomial> x;
  for (const Polynomial& g : j.generators()) x.push_back(g.pow(n));
  const IdealHandle in = i.power(n);
  const IdealHandle i2n = i.power(2 * n);
  const IdealHandle jn = bracket_power(j, n);
  const FiberSpace s1(in);
  const FiberSpace s2(i2n);
  const FiberSpace dst(ideal_product(i2n, jn));
  const std::size_t mu1 = s1.dimension();
  const std::size_t mu2 = s2.dimension();
  const Field field = i.ring().field();

  FiniteComplex c;
  c.labels = {"I^{2n}J^[n]/mI^{2n}J^[n]", "(I^{2n}/mI^{2n})^3", "(I^n/mI^n)^3", "A/m"};
  c.dims = {dst.dimension(), 3 * mu2, 3 * mu1, 1};
  Matrix d1(c.dims[0], c.dims[1], field);
  for (std::size_t k = 0; k < mu2; ++k) {
    for (std::size_t b = 0; b < 3; ++b) put_column(d1, b * mu2 + k, 0, dst.coordinates(x[b] * s2.basis()[k]));
  }
  // (a, b, c) -> (-x2 a - x3 b, x1 a - x3 c, x1 b + x2 c)
  Matrix d2(c.dims[1], c.dims[2], field);
  for (std::size_t k = 0; k < mu1; ++k) {
    const Polynomial& e = s1.basis()[k];
    put_column(d2, k, 0, negate(s2.coordinates(x[1] * e)));
    put_column(d2, k, mu2, s2.coordinates(x[0] * e));
    put_column(d2, mu1 + k, 0, negate(s2.coordinates(x[2] * e)));
    put_column(d2, mu1 + k, 2 * mu2, s2.coordinates(x[0] * e));
    put_column(d2, 2 * mu1 + k, mu2, negate(s2.coordinates(x[2] * e)));
    put_column(d2, 2 * mu1 + k, 2 * mu2, s2.coordinates(x[1] * e));
  }
  Matrix d3(c.dims[2], 1, field);
  put_column(d3, 0, 0, s1.coordinates(x[2]));
  put_column(d3, 0, mu1, negate(s1.coordinates(x[1])));
  put_column(d3, 0, 2 * mu1, s1.coordinates(x[0]));
  c.maps = {std::move(d1), std::move(d2), std::move(d3)};
  compute_homology(c);
  if (c.homology[0] != 0) fail(ErrorCode::kInternalInconsistency, "D.: the last map is not surjective");
  if (c.homology[3] != 0) fail(ErrorCode::kHypothesis, "D.: x1^n, x2^n, x3^n are not analytically independent");

  const std::int64_t r2 = -1 + 3 * static_cast<std::int64_t>(mu1) - 3 * static_cast<std::int64_t>(mu2) +
                          static_cast<std::int64_t>(c.dims[0]);
  c.notes.push_back("-1 + 3 mu(I^n) - 3 mu(I^{2n}) + mu(I^{2n} J^[n]) = " + std::to_string(r2) +
                    " = dim H_2 - dim H_1");
  const bool regular = is_regular_sequence(x, i.ring_ptr());
  const bool meets = ideal_contains(ideal_product(jn, in), ideal_intersection(i2n, jn));
  c.notes.push_back(std::string("x1^n, x2^n, x3^n regular sequence: ") + (regular ? "yes" : "no"));
  c.notes.push_back(std::string("I^{2n} meets J^[n] in J^[n] I^n: ") + (meets ? "yes" : "no"));
  if (regular && meets && c.homology[1] != 0) {
    fail(ErrorCode::kInternalInconsistency, "D.: H_1 != 0 although the exactness hypotheses hold");
  }
  return c;
}

ResolutionData fiber_resolution(const IdealHandle& i, const IdealHandle& j, std::uint32_t n,
                                const HilbertData& fiber_of_i) {
  if (fiber_of_i.form().denom_exp != 2) fail(ErrorCode::kHypothesis, "fiber_resolution needs analytic spread 2");
  if (j.generators().size() != 2) fail(ErrorCode::kHypothesis, "fiber_resolution needs J = (x1, x2)");
  if (!reduces_at(bracket_power(j, n), i.power(n), 1)) {
    fail(ErrorCode::kHypothesis, "F(I^n) is not generated in degrees <= 1 over F(J^[n]) at n = " + std::to_string(n));
  }
  const RationalForm target = veronese(fiber_of_i, n).form();
  const std::size_t deg = target.numerator.empty() ? 0 : target.numerator.size() - 1;
  const std::size_t top = deg + 4;

  // Try x1 = first generator, then the other order; x1^n must be regular on F(I^n).
  std::optional<std::string> failure;
  for (std::size_t first = 0; first < 2; ++first) {
    const Polynomial x1 = j.generators()[first].pow(n);
    const Polynomial x2 = j.generators()[1 - first].pow(n);
    std::vector<FiberSpace> spaces;
    for (std::size_t d = 0; d <= top; ++d) spaces.emplace_back(i.power(static_cast<std::uint32_t>(n * d)));

    ResolutionData out;
    out.n = n;
    out.s_dims.push_back(1);
    bool regular = true;
    for (std::size_t d = 1; d <= top && regular; ++d) {
      const std::size_t r = span_rank(spaces[d], times(x1, spaces[d - 1].basis()));
      if (r != spaces[d - 1].dimension()) regular = false;
      out.s_dims.push_back(spaces[d].dimension() - r);
    }
    if (!regular) {
      failure = "(x1^n)* is a zero divisor on F(I^n) for x1 = " + i.ring().format(j.generators()[first]);
      continue;
    }
    const std::size_t tail = out.s_dims.back();
    if (out.s_dims[top - 1] != tail || out.s_dims[top - 2] != tail) {
      fail(ErrorCode::kInternalInconsistency, "dim S_j not constant past the numerator degree");
    }
    // S = R + R(-1)^p + sum R/(X^a)(-1): dim S_d - dim S_inf counts the a >= d.
    std::vector<std::uint32_t> alphas;
    for (std::size_t d = 1; d < top; ++d) {
      if (out.s_dims[d] < tail || out.s_dims[d + 1] > out.s_dims[d]) {
        fail(ErrorCode::kInternalInconsistency, "S has an unexpected Hilbert function");
      }
      for (std::size_t c = out.s_dims[d + 1]; c < out.s_dims[d]; ++c) alphas.push_back(static_cast<std::uint32_t>(d));
    }
    // Summands with a = 0 are degree-1 syzygies among degree <= 1 generators:
    // the kernel of (X1, X2) -> I^n/mI^n after completing to a minimal system.
    const std::size_t rank12 = span_rank(spaces[1], {x1, x2});
    const std::size_t zero_alphas = 2 - rank12;
    alphas.insert(alphas.begin(), zero_alphas, 0);
    out.alphas = alphas;
    out.beta1 = alphas.size();
    out.beta0 = 1 + spaces[1].dimension() - rank12;

    std::vector<std::int64_t> num(std::max<std::size_t>(deg + 1, 2 + (alphas.empty() ? 0 : alphas.back())), 0);
    num[0] = 1;
    num[1] += static_cast<std::int64_t>(out.beta0) - 1;
    for (std::uint32_t a : alphas) num[1 + a] -= 1;
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num != target.numerator) {
      fail(ErrorCode::kInternalInconsistency, "resolution data do not reproduce the fiber series of I^n");
    }
    return out;
  }
  fail(ErrorCode::kRegularityNotEstablished, *failure);
}

TheoremReport check_theorem_l2(const IdealHandle& i, const IdealHandle& j, const CheckOptions& opts) {
  const HilbertData f = fiber_hilbert(i, opts.nmax);
  if (f.form().denom_exp != 2) {
    fail(ErrorCode::kHypothesis, "analytic spread is " + std::to_string(f.form().denom_exp) + ", not 2");
  }
  const CoefficientVector c = extract_coefficients(f, CoefficientKind::kFiber);
  TheoremReport rep;
  rep.theorem = "f1 <= f0 - 1 when l(I) = 2 and a(I) < 0; equality when grade(I) = 2";
  rep.coefficients = c.entries;

  ASignResult sign = a_invariant_sign(i, j, 2, opts.window_lo, opts.window_hi, opts.red_bound);
  rep.hypotheses.push_back({"a(I) < 0", from_sign(sign.sign), sign.report.window, join_evidence(sign.report)});
  HypothesisRow grade = grade_row(i, j, opts, 2);
  rep.hypotheses.push_back(grade);

  rep.conclusion = {"f1 <= f0 - 1", c.entries[1], c.entries[0] - 1, c.entries[1] <= c.entries[0] - 1};
  const bool equal = c.entries[1] == c.entries[0] - 1;
  if (grade.status == Verdict::kHolds && sign.sign == ASign::kNegative) {
    rep.notes.push_back(std::string("equality f1 = f0 - 1 expected and ") + (equal ? "observed" : "NOT observed"));
  } else {
    rep.notes.push_back(std::string("equality f1 = f0 - 1 ") + (equal ? "holds" : "fails, strict inequality"));
  }
  rep.notes.push_back(cm_diagnosis(f.form()));

  // Resolutions on the stable tail of the reduction-number window.
  if (sign.sign == ASign::kNegative) {
    std::size_t start = sign.report.evidence.size();
    // per-n evidence details end in the reduction number; walk back over the constant tail.
    const std::string last = sign.report.evidence.back().detail;
    while (start > 0 && sign.report.evidence[start - 1].detail == last) --start;
    for (std::size_t k = start; k < sign.report.evidence.size(); ++k) {
      const auto n = static_cast<std::uint32_t>(opts.window_lo + k);
      try {
        ResolutionData r = fiber_resolution(i, j, n, f);
        std::int64_t sum = 0;
        for (std::uint32_t a : r.alphas) sum += a;
        const bool ok = -sum == c.entries[1] - c.entries[0] + 1;
        rep.notes.push_back("n=" + std::to_string(n) + ": -sum alpha = " + std::to_string(-sum) +
                            (ok ? " = " : " != ") + "f1 - f0 + 1, beta1 = " + std::to_string(r.beta1) +
                            (r.beta1 == 0 ? " (F(I^n) Cohen-Macaulay)" : ""));
        rep.resolutions.push_back(std::move(r));
      } catch (const Error& e) {
        rep.notes.push_back("n=" + std::to_string(n) + ": resolution not computed: " + e.what());
      }
    }
  }
  return rep;
}

TheoremReport check_theorem_l3(const IdealHandle& i, const IdealHandle& j, const CheckOptions& opts) {
  const HilbertData f = fiber_hilbert(i, opts.nmax);
  if (f.form().denom_exp != 3) {
    fail(ErrorCode::kHypothesis, "analytic spread is " + std::to_string(f.form().denom_exp) + ", not 3");
  }
  const CoefficientVector c = extract_coefficients(f, CoefficientKind::kFiber);
  TheoremReport rep;
  rep.theorem = "f2 >= f1 - f0 + 1 when l(I) = grade(I) = 3, V2-infinity holds and a(I) < 0";
  rep.coefficients = c.entries;

  HypothesisRow grade = grade_row(i, j, opts, 3);
  grade.name = "(a) " + grade.name;
  rep.hypotheses.push_back(grade);

  VerdictReport v2 = v2_infinity(i, j, opts.window_lo, std::min(opts.window_hi, 3U));
  rep.hypotheses.push_back({"(b) I^{2n} meets J^[n] in J^[n] I^n", v2.status, v2.window, join_evidence(v2)});

  ASignResult sign;
  if (colength(i).is_finite()) {
    const std::uint32_t red = reduction_number(j, i, opts.red_bound).red;
    std::uint32_t depth = 0;
    if (!opts.depth_sequence.empty()) {
      VerdictReport d = graded_regular_sequence(i, opts.depth_sequence, opts.nmax);
      rep.hypotheses.push_back({"depth G(I) >= " + std::to_string(opts.depth_sequence.size()), d.status, d.window,
                                join_evidence(d)});
      if (d.status == Verdict::kHolds) depth = static_cast<std::uint32_t>(opts.depth_sequence.size());
    }
    if (red + 1 <= 3) {
      // a(I) + l <= red_J(I), so red_J(I) <= l - 1 already forces a(I) < 0.
      sign.sign = ASign::kNegative;
      sign.report.status = Verdict::kHolds;
      sign.report.window = "n=1";
      sign.report.evidence.push_back({"n=1", true, "red_J(I) = " + std::to_string(red) + " <= l - 1"});
    } else {
      sign = a_invariant_sign_certified(i, j, red, depth);
      sign.report.evidence.insert(sign.report.evidence.begin(), {"n=1", true, "red_J(I) = " + std::to_string(red)});
    }
  } else {
    sign = a_invariant_sign(i, j, 3, opts.window_lo, opts.window_hi, opts.red_bound);
  }
  rep.hypotheses.push_back({"(c) a(I) < 0", from_sign(sign.sign), sign.report.window, join_evidence(sign.report)});

  const std::int64_t rhs = c.entries[1] - c.entries[0] + 1;
  rep.conclusion = {"f2 >= f1 - f0 + 1", c.entries[2], rhs, c.entries[2] >= rhs};
  static const char* const kPatterns[] = {"grade deficit: grade(I) < l(I)",
                                          "intersection failure: I^{2n} meets J^[n] outside J^[n] I^n",
                                          "nonnegative a-invariant"};
  bool any = false;
  for (std::size_t k = 0; k < 3; ++k) {
    if (rep.hypotheses[k == 2 ? rep.hypotheses.size() - 1 : k].status == Verdict::kFails) {
      rep.notes.push_back(std::string("failure pattern: ") + kPatterns[k]);
      any = true;
    }
  }
  if (!rep.conclusion.holds && !any) {
    rep.notes.push_back("conclusion fails with no hypothesis refuted on the tested windows");
  }
  return rep;
}

TheoremReport check_higher_spread(const IdealHandle& i, const IdealHandle& j, const std::vector<Polynomial>& xs,
                                  const CheckOptions& opts) {
  if (xs.empty()) fail(ErrorCode::kStructural, "check_higher_spread needs at least one element");
  const RingPtr& ring = i.ring_ptr();
  std::vector<HypothesisRow> rows;
  const bool regular = is_regular_sequence(xs, ring);
  rows.push_back({"xs regular sequence", regular ? Verdict::kHolds : Verdict::kFails, "", ""});
  for (std::size_t k = 0; k < xs.size(); ++k) {
    RingPtr sub = ring->with_relations(std::vector<Polynomial>(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k)));
    VerdictReport rs = is_rees_superficial(xs[k], IdealHandle(sub, i.generators()), 1, 5, 3);
    rows.push_back({"Rees-superficial " + ring->format(xs[k]), rs.status, rs.window, join_evidence(rs)});
  }
  const RingPtr cut = ring->with_relations(xs);
  const IdealHandle k_ideal(cut, i.generators());
  const IdealHandle k_red(cut, j.generators());
  const CoefficientVector fi = extract_coefficients(fiber_hilbert(i, opts.nmax), CoefficientKind::kFiber);
  const CoefficientVector fk = extract_coefficients(fiber_hilbert(k_ideal, opts.nmax), CoefficientKind::kFiber);
  const std::size_t l = fi.entries.size();
  bool agree = fk.entries.size() + xs.size() == l;
  std::string detail;
  for (std::size_t t = 0; t + 2 <= l && t < fk.entries.size(); ++t) {
    agree = agree && fi.entries[t] == fk.entries[t];
    detail += "f" + std::to_string(t) + ": " + std::to_string(fk.entries[t]) + " vs " + std::to_string(fi.entries[t]) + "; ";
  }
  rows.push_back({"f_i(I/(xs)) = f_i(I) for i <= l - 2", agree ? Verdict::kHolds : Verdict::kFails, "", detail});

  TheoremReport rep;
  if (fk.entries.size() == 2) {
    rep = check_theorem_l2(k_ideal, k_red, opts);
  } else if (fk.entries.size() == 3) {
    rep = check_theorem_l3(k_ideal, k_red, opts);
  } else {
    rep.theorem = "reduction to spread 2 or 3";
    rep.notes.push_back("I/(xs) has analytic spread " + std::to_string(fk.entries.size()));
  }
  rep.notes.insert(rep.notes.begin(), "reduced " + i.to_string() + " to " + k_ideal.to_string() + " in " + cut->describe());
  rep.hypotheses.insert(rep.hypotheses.begin(), rows.begin(), rows.end());
  return rep;
}

}  // namespace fibrant
