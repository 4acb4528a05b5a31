#include <doctest.h>

#include <random>

#include "fibrant/errors.hpp"
#include "fibrant/groebner.hpp"
#include "fibrant/ring.hpp"

using namespace fibrant;

namespace {

Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
  const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = f.times_term(f.leading_coefficient().inverse(), *monomial_divrem(l, f.leading_monomial()));
  const Polynomial b = g.times_term(g.leading_coefficient().inverse(), *monomial_divrem(l, g.leading_monomial()));
  return a - b;
}

// Buchberger's criterion plus reducedness, checked from scratch.
void check_reduced_basis(const std::vector<Polynomial>& gb, const std::vector<Polynomial>& input) {
  for (const Polynomial& f : input) CHECK(normal_form(f, gb).is_zero());
  for (std::size_t i = 0; i < gb.size(); ++i) {
    CHECK(gb[i].leading_coefficient().is_one());
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : gb[i].terms()) CHECK_FALSE(gb[j].leading_monomial().divides(t.mono));
      if (j > i) CHECK(normal_form(s_poly(gb[i], gb[j]), gb).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("known reduced basis in lex") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  RingSignature lex = r->signature();
  lex.order = TermOrder::lex();
  const std::vector<std::size_t> id = {0, 1};
  std::vector<Polynomial> in = {r->parse("x^2 + y").rebase(lex, id), r->parse("x*y - 1").rebase(lex, id)};
  const auto gb = reduced_groebner_basis(in);
  // x = -y^2 and y^3 = -1
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == r->parse("x + y^2").rebase(lex, id));
  CHECK(gb[1] == r->parse("y^3 + 1").rebase(lex, id));
}

TEST_CASE("unit ideal collapses to 1") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const auto gb = reduced_groebner_basis({r->parse("x*y - 1"), r->parse("x")});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == r->one());
}

TEST_CASE("random systems satisfy the Buchberger criterion") {
  std::mt19937_64 rng(11);
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    const RingPtr r = AmbientRing::make({"x", "y", "z"}, f);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> in;
      for (int k = 0; k < 3; ++k) {
        std::vector<Term> terms;
        for (int t = 0; t < 3; ++t) {
          const Monomial m(3, {static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                               static_cast<std::uint32_t>(rng() % 2)});
          terms.push_back({Scalar::from_int(static_cast<long>(rng() % 9) - 4, f), m});
        }
        Polynomial p = Polynomial::from_terms(r->signature(), terms);
        if (!p.is_zero()) in.push_back(p);
      }
      if (in.empty()) continue;
      const auto gb = reduced_groebner_basis(in);
      check_reduced_basis(gb, in);
      // invariant under generator order
      std::vector<Polynomial> rev(in.rbegin(), in.rend());
      CHECK(reduced_groebner_basis(rev) == gb);
    }
  }
}

TEST_CASE("budget exhaustion is a resource error") {
  const RingPtr r = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  GroebnerBudget tiny;
  tiny.max_pairs = 1;
  try {
    reduced_groebner_basis({r->parse("x*y - z^2"), r->parse("x*z - y^2"), r->parse("y*z - x^2")}, tiny);
    FAIL("expected the budget to run out");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kResourceLimit);
  }
}

TEST_CASE("monomial combinatorics") {
  using namespace monomial_ideal;
  const Monomial x2(2, {2, 0}), xy(2, {1, 1}), y2(2, {0, 2}), x3(2, {3, 0});
  const std::vector<Monomial> a = {x2, xy, x3};
  CHECK(minimalize(a) == minimalize({x2, xy}));
  CHECK(count_standard(std::vector<Monomial>{x2, xy, y2}, 2) == 3u);
  CHECK_FALSE(count_standard(std::vector<Monomial>{x2, xy}, 2).has_value());
  CHECK(quotient(std::vector<Monomial>{x2, y2}, xy) == minimalize({Monomial(2, {1, 0}), Monomial(2, {0, 1})}));
}

TEST_CASE("general path forcing is scoped") {
  CHECK_FALSE(general_path_forced());
  {
    GeneralPathScope scope;
    CHECK(general_path_forced());
  }
  CHECK_FALSE(general_path_forced());
}
