#include <doctest.h>

#include <random>

#include "fibrant/errors.hpp"
#include "fibrant/reductions.hpp"
#include "monomial_util.hpp"

using namespace fibrant;

TEST_CASE("reduction numbers of bracket powers match brute force") {
  std::mt19937_64 rng(31);
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);
    oracle::Gens g = {{d, 0}, {0, d}};
    for (int k = 0; k < 2; ++k) {
      const int a = 1 + static_cast<int>(rng() % (d - 1));
      g.push_back({a, d - a + static_cast<int>(rng() % 2)});
    }
    g = oracle::minimal(g);
    const oracle::Gens j = {{d, 0}, {0, d}};
    const IdealHandle ii = to_ideal(r, g), jj = to_ideal(r, j);
    const AsymptoticReduction ar = asymptotic_reduction_number(ii, jj, 1, 3);
    for (const auto& [n, red] : ar.per_n) {
      const int expect = oracle_reduction(oracle_bracket(j, static_cast<int>(n)), oracle::power(g, static_cast<int>(n)), 10);
      CHECK(static_cast<int>(red) == expect);
    }
    const int red1 = oracle_reduction(j, g, 10);
    CHECK(static_cast<int>(reduction_number(jj, ii).red) == red1);
    CHECK(reduces_at(jj, ii, static_cast<std::uint32_t>(red1)));
    if (red1 > 0) CHECK_FALSE(reduces_at(jj, ii, static_cast<std::uint32_t>(red1 - 1)));
  }
}

TEST_CASE("not a reduction within the bound") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  try {
    reduction_number(IdealHandle::parse(r, "x^2"), IdealHandle::parse(r, "x^2, y^2"), 4);
    FAIL("expected kNotAReductionWithinBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAReductionWithinBound);
  }
}

TEST_CASE("random minimal reductions are reductions and reproducible") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const IdealHandle i = IdealHandle::parse(r, "x^3, x^2*y, y^3");
  const ReductionRecord a = find_minimal_reduction(i, 42);
  const ReductionRecord b = find_minimal_reduction(i, 42);
  CHECK(a.j.generators() == b.j.generators());
  CHECK(a.j.generators().size() == 2);
  CHECK(reduces_at(a.j, i, a.red));
  CHECK(a.verified_through == a.red + 2);
}

TEST_CASE("Valabrega-Valla condition against brute force") {
  std::mt19937_64 rng(41);
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 2);
    oracle::Gens g = {{d, 0}, {0, d}, {1 + static_cast<int>(rng() % (d - 1)), d - 1}};
    g = oracle::minimal(g);
    const oracle::Gens j = {{d, 0}, {0, d}};
    bool all = true;
    for (int n = 1; n <= 3; ++n) {
      const oracle::Gens lhs = oracle::intersection(oracle::power(g, n), j);
      const oracle::Gens rhs = oracle::product(j, oracle::power(g, n - 1));
      all = all && lhs == rhs;
    }
    const VerdictReport v = valabrega_valla(to_ideal(r, j), to_ideal(r, g), 1, 3);
    CHECK((v.status == Verdict::kHolds) == all);
    CHECK(v.evidence.size() == 3);
  }
}

TEST_CASE("Ratliff-Rush closure against brute-force quotients") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const oracle::Gens q = {{4, 0}, {3, 1}, {1, 3}, {0, 4}};
  oracle::Gens closure = q;
  for (int n = 1; n <= 5; ++n) {
    const oracle::Gens step = oracle::quotient(oracle::power(q, n + 1), oracle::power(q, n));
    oracle::Gens u = closure;
    u.insert(u.end(), step.begin(), step.end());
    closure = oracle::minimal(u);
  }
  const RatliffRush rr = ratliff_rush(to_ideal(r, q));
  CHECK(ideal_equals(rr.closure, to_ideal(r, closure)));
  CHECK(closure != q);  // x^2 y^2 enters
  const RatliffRush same = ratliff_rush(IdealHandle::parse(r, "x^2, x*y, y^2"));
  CHECK(ideal_equals(same.closure, IdealHandle::parse(r, "x^2, x*y, y^2")));
}

TEST_CASE("regular sequences and grade") {
  const RingPtr free = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  CHECK(is_regular_sequence({free->parse("x"), free->parse("y"), free->parse("z")}, free));
  CHECK_FALSE(is_regular_sequence({free->parse("x*y"), free->parse("x*z")}, free));
  const RingPtr q = AmbientRing::make({"x", "y"}, Field::rationals(), {"x*y"});
  CHECK_FALSE(is_regular_sequence({q->parse("x")}, q));
  CHECK(is_regular_sequence({q->parse("x + y")}, q));

  const GradeEvidence g = grade_evidence(IdealHandle::parse(free, "x^2, x*y"));
  CHECK(g.lower == 1);
  CHECK(g.exact);
  REQUIRE(g.witness.has_value());
  CHECK(grade_evidence(maximal_ideal(free)).lower == 3);
}

TEST_CASE("superficial and filter-regular elements") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const IdealHandle m = maximal_ideal(r);
  CHECK(is_superficial(r->parse("x"), m, 1, 4).status == Verdict::kHolds);
  CHECK(is_filter_regular(r->parse("x + y"), m, 1, 5).status == Verdict::kHolds);
  CHECK(is_rees_superficial(r->parse("x"), m, 1, 3, 2).status == Verdict::kHolds);
  // x^2 is in m^2, so it cannot be superficial of degree one for m
  CHECK(is_superficial(r->parse("x^2"), m, 1, 4).status == Verdict::kFails);
  CHECK(power_filter_regular_transfer(r->parse("x"), m, 2, 1, 5).status == Verdict::kHolds);
}

TEST_CASE("graded regular sequence via Hilbert series") {
  const RingPtr r = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  const IdealHandle m = maximal_ideal(r);
  CHECK(graded_regular_sequence(m, {r->parse("x"), r->parse("y")}, 6).status == Verdict::kHolds);
  const RingPtr q = AmbientRing::make({"x", "y"}, Field::rationals(), {"x*y"});
  CHECK(graded_regular_sequence(maximal_ideal(q), {q->parse("x")}, 6).status == Verdict::kFails);
}

TEST_CASE("sign of the a-invariant") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const IdealHandle marley = IdealHandle::parse(r, "x^7, x^6*y, x*y^6, y^7");
  const IdealHandle j = IdealHandle::parse(r, "x^7, y^7");
  const ASignResult s = a_invariant_sign(marley, j, 2, 1, 8);
  CHECK(s.sign == ASign::kNegative);
  CHECK(s.asymptotic_red == 1u);
  CHECK(s.report.window == "n in [1, 8]");

  const IdealHandle m2 = IdealHandle::parse(r, "x^2, x*y, y^2");
  const IdealHandle j2 = IdealHandle::parse(r, "x^2, y^2");
  CHECK(a_invariant_sign_certified(m2, j2, 1, 2).sign == ASign::kNegative);
  CHECK(decisive_power(1, 2, 2) >= 1);
}

TEST_CASE("second Valabrega-Valla condition") {
  const RingPtr r = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  const IdealHandle i = IdealHandle::parse(r, "x^4, x^3*y, x*y^3, y^4, z");
  const IdealHandle j = IdealHandle::parse(r, "x^4, y^4, z");
  const VerdictReport v = v2_infinity(i, j, 1, 2);
  CHECK(v.status == Verdict::kFails);
  CHECK(v.witness.has_value());
  CHECK(v2_infinity(maximal_ideal(r), maximal_ideal(r), 1, 2).status == Verdict::kHolds);
}
