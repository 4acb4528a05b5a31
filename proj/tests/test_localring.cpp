#include <doctest.h>

#include <random>

#include "fibrant/errors.hpp"
#include "fibrant/localring.hpp"
#include "monomial_util.hpp"

using namespace fibrant;


TEST_CASE("colength and mu of monomial ideals match the oracle") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> vars = {"x", "y", "z"};
    vars.resize(n);
    const RingPtr r = AmbientRing::make(vars, Field::rationals());
    for (int trial = 0; trial < 30; ++trial) {
      oracle::Gens g = oracle::random_ideal(rng, n, 5, 4);
      if (trial % 2 == 0) {  // make it m-primary
        for (std::size_t i = 0; i < n; ++i) {
          oracle::Exp e(n, 0);
          e[i] = 2 + static_cast<int>(rng() % 4);
          g.push_back(e);
        }
        g = oracle::minimal(g);
      }
      const IdealHandle i = to_ideal(r, g);
      const long expect = oracle::colength(g);
      const LengthValue got = colength(i);
      if (expect < 0) {
        CHECK_FALSE(got.is_finite());
      } else {
        REQUIRE(got.is_finite());
        CHECK(got.value() == static_cast<std::size_t>(expect));
      }
      CHECK(min_gens(i) == g.size());
      CHECK(is_locally_primary(i) == (expect >= 0));
    }
  }
}

TEST_CASE("local colength ignores components away from the origin") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  // x + x^2 = x (1 + x); the point x = -1 is not local
  const IdealHandle u = IdealHandle::parse(r, "x + x^2, y");
  CHECK(colength(u).value() == 1);
  CHECK(membership(r->parse("x"), u));
  CHECK_FALSE(u.contains_polynomially(r->parse("x")));
  CHECK(min_gens(u) == 2);
}

TEST_CASE("local colength for non-graded ideals") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  // (y - x^2, x^3): k[x]/(x^3), length 3
  CHECK(colength(IdealHandle::parse(r, "y - x^2, x^3")).value() == 3);
  // (y^2 - x^3, x*y): the cusp cut by xy
  CHECK(colength(IdealHandle::parse(r, "y^2 - x^3, x*y")).value() == 5);
}

TEST_CASE("quotient dimension and containment") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const IdealHandle m = maximal_ideal(r);
  const IdealHandle m2 = ideal_power(m, 2);
  CHECK(quotient_dim(m, m2).value() == 2);
  CHECK(ideal_contains(m, m2));
  CHECK_FALSE(ideal_contains(m2, m));
  CHECK(containment_witness(m2, m).has_value());
  try {
    quotient_dim(m2, m);
    FAIL("expected a containment error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kContainment);
  }
}

TEST_CASE("fiber space coordinates over a quotient ring") {
  const RingPtr r = AmbientRing::make({"x", "y", "z"}, Field::rationals(), {"x^2", "x*y"});
  const IdealHandle m = maximal_ideal(r);
  FiberSpace f(m);
  CHECK(f.dimension() == 3);
  CHECK(f.image_rank({r->parse("x + y"), r->parse("x - y"), r->parse("y*z")}) == 2);
  const auto c = f.coordinates(r->parse("2*x + z + y^2"));
  REQUIRE(c.size() == 3);
  CHECK(f.image_rank({r->parse("y^2"), r->parse("x*z")}) == 0);
}

TEST_CASE("ideal operations agree with the brute-force oracle") {
  std::mt19937_64 rng(5);
  const RingPtr r = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  for (int trial = 0; trial < 25; ++trial) {
    const oracle::Gens a = oracle::random_ideal(rng, 3, 4, 3);
    const oracle::Gens b = oracle::random_ideal(rng, 3, 4, 3);
    const IdealHandle ia = to_ideal(r, a), ib = to_ideal(r, b);
    CHECK(ideal_equals(ideal_intersection(ia, ib), to_ideal(r, oracle::intersection(a, b))));
    CHECK(ideal_equals(ideal_quotient(ia, ib), to_ideal(r, oracle::quotient(a, b))));
    CHECK(ideal_equals(ideal_product(ia, ib), to_ideal(r, oracle::product(a, b))));
  }
}

TEST_CASE("saturation strips a variable") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  const IdealHandle i = IdealHandle::parse(r, "x^3*y, x^2*y^2");
  CHECK(ideal_equals_polynomially(saturation(i, r->parse("x")), IdealHandle::parse(r, "y")));
}
