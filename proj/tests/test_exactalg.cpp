#include <doctest.h>

#include <random>

#include "fibrant/errors.hpp"
#include "fibrant/linalg.hpp"
#include "fibrant/ring.hpp"
#include "oracle.hpp"

using namespace fibrant;

TEST_CASE("scalar arithmetic over QQ and F_p") {
  const Field q = Field::rationals();
  const Scalar a = Scalar::from_rational(mpq_class(3, 4), q);
  const Scalar b = Scalar::from_int(-2, q);
  CHECK((a * b).to_string() == "-3/2");
  CHECK((a / b + a * b.inverse()).to_rational() == mpq_class(-3, 4));
  CHECK((a - a).is_zero());

  const Field p = Field::prime(7);
  const Scalar x = Scalar::from_int(3, p);
  CHECK((x * x.inverse()).is_one());
  CHECK(Scalar::from_int(10, p) == x);
  CHECK(Scalar::from_rational(mpq_class(1, 2), p) == Scalar::from_int(4, p));
  CHECK(Scalar::from_int(6, p).to_string() == "-1");
  CHECK_THROWS_AS(Scalar::zero(p).inverse(), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
}

TEST_CASE("inverse is exact in every prime field tried") {
  for (std::uint32_t p : {2u, 3u, 5u, 101u, 32003u}) {
    const Field f = Field::prime(p);
    for (long v = 1; v < 40; ++v) {
      const Scalar s = Scalar::from_int(v, f);
      if (!s.is_zero()) CHECK((s * s.inverse()).is_one());
    }
  }
}

TEST_CASE("monomial divisibility, lcm and colon") {
  const Monomial a(3, {2, 1, 0});
  const Monomial b(3, {1, 3, 2});
  CHECK(monomial_lcm(a, b) == Monomial(3, {2, 3, 2}));
  CHECK(monomial_gcd(a, b) == Monomial(3, {1, 1, 0}));
  CHECK(monomial_colon(a, b) == Monomial(3, {1, 0, 0}));
  CHECK(monomial_gcd(a, b).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a * b).degree() == a.degree() + b.degree());
  CHECK(monomial_divrem(a * b, b) == a);
  CHECK_FALSE(monomial_divrem(a, b).has_value());
}

TEST_CASE("term orders") {
  const Monomial x2(2, {2, 0}), xy(2, {1, 1}), y3(2, {0, 3});
  CHECK(monomial_compare(y3, x2, TermOrder::grevlex()) == std::strong_ordering::greater);
  CHECK(monomial_compare(x2, y3, TermOrder::lex()) == std::strong_ordering::greater);
  CHECK(monomial_compare(x2, xy, TermOrder::grevlex()) == std::strong_ordering::greater);
}

TEST_CASE("polynomial parse, format and ring identities") {
  const RingPtr r = AmbientRing::make({"x", "y", "z"}, Field::rationals());
  const Polynomial f = r->parse("3*x^2*y - y^3 + 1/2");
  const Polynomial g = r->parse("x - 2*z");
  CHECK(r->parse(r->format(f)) == f);
  CHECK((f + g) * (f - g) == f * f - g * g);
  CHECK(f.pow(3) == f * f * f);
  CHECK(divide_exact(f * g, g) == f);
  CHECK_FALSE(divide_exact(f, g).has_value());
  CHECK(f.degree() == 3);
  CHECK(f.low_degree() == 0);
  CHECK_FALSE(f.is_homogeneous());
  CHECK_THROWS_AS(r->parse("x + w"), Error);
  CHECK_THROWS_AS(r->parse("x +* y"), Error);
}

TEST_CASE("parse errors carry a column") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  try {
    r->parse("x + y^");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("col") != std::string::npos);
  }
}

TEST_CASE("ring with relations reduces modulo them") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals(), {"x*y", "y^3"});
  CHECK(r->reduce(r->parse("x^2*y + y^4 + x")) == r->parse("x"));
  CHECK(r->relations_monomial());
  CHECK(r->with_field(Field::prime(5))->field().modulus() == 5);
}

TEST_CASE("dense rank agrees with the textbook oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    Matrix m(rows, cols, Field::rationals());
    std::vector<std::vector<mpq_class>> o(rows, std::vector<mpq_class>(cols));
    const std::size_t low = rng() % 3;  // force some rank deficiency
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        long v = static_cast<long>(rng() % 7) - 3;
        if (i > 0 && i <= low) v = 0;
        o[i][j] = v;
        m.at(i, j) = Scalar::from_int(v, Field::rationals());
      }
    }
    if (rows > 2) {  // dependent row
      for (std::size_t j = 0; j < cols; ++j) {
        o[rows - 1][j] = o[0][j] * 2 - o[1][j];
        m.at(rows - 1, j) = Scalar::from_rational(o[rows - 1][j], Field::rationals());
      }
    }
    const std::size_t expect = oracle::rank(o);
    CHECK(rank(m) == expect);
    std::vector<SparseRow> sparse(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!m.at(i, j).is_zero()) sparse[i].push_back({j, m.at(i, j)});
      }
    }
    CHECK(sparse_rank(sparse, cols, Field::rationals()) == expect);
  }
}

TEST_CASE("sparse rank is exact when a prime divides a minor") {
  // det = 1000003 * 2 would vanish modulo a prime dividing it; the answer stays exact
  const Field q = Field::rationals();
  std::vector<SparseRow> rows = {{{0, Scalar::from_int(1000003, q)}, {1, Scalar::from_int(1, q)}},
                                 {{0, Scalar::from_int(0, q)}, {1, Scalar::from_int(2, q)}}};
  rows[1].erase(rows[1].begin());
  CHECK(sparse_rank(rows, 2, q) == 2);
  std::vector<SparseRow> dep = {{{0, Scalar::from_int(2, q)}, {1, Scalar::from_int(4, q)}},
                                {{0, Scalar::from_int(3, q)}, {1, Scalar::from_int(6, q)}}};
  CHECK(sparse_rank(dep, 2, q) == 1);
}

TEST_CASE("kernel vector is a true relation") {
  const Field q = Field::rationals();
  auto s = [&](long v) { return Scalar::from_int(v, q); };
  std::vector<std::vector<Scalar>> rows = {{s(1), s(2), s(3)}, {s(0), s(1), s(1)}, {s(2), s(5), s(7)}};
  const auto c = kernel_vector(rows, q);
  REQUIRE(c.has_value());
  for (std::size_t j = 0; j < 3; ++j) {
    Scalar acc = Scalar::zero(q);
    for (std::size_t i = 0; i < 3; ++i) acc += (*c)[i] * rows[i][j];
    CHECK(acc.is_zero());
  }
  CHECK_FALSE(kernel_vector({{s(1), s(0)}, {s(0), s(1)}}, q).has_value());
}

TEST_CASE("linear basis coordinates reproduce the vector") {
  const RingPtr r = AmbientRing::make({"x", "y"}, Field::rationals());
  LinearBasis b(r->signature());
  CHECK(b.insert(r->parse("x + y")));
  CHECK(b.insert(r->parse("x - y")));
  CHECK_FALSE(b.insert(r->parse("3*x")));
  const auto c = b.coordinates(r->parse("5*x + y"));
  REQUIRE(c.has_value());
  CHECK(((*c)[0] - Scalar::from_int(3, Field::rationals())).is_zero());
  CHECK(((*c)[1] - Scalar::from_int(2, Field::rationals())).is_zero());
  CHECK_FALSE(b.contains(r->parse("x*y")));
}
