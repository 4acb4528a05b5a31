#include <doctest.h>

#include <random>
#include <set>

#include "fibrant/errors.hpp"
#include "fibrant/invariants.hpp"
#include "fibrant/reductions.hpp"
#include "fibrant/semigroup.hpp"

using namespace fibrant;

namespace {

constexpr long kLimit = 400;

// Elements of S below kLimit by dynamic programming.
std::vector<bool> brute_semigroup(const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(kLimit, false);
  in[0] = true;
  for (long n = 1; n < kLimit; ++n) {
    for (std::uint32_t g : gens) {
      if (static_cast<long>(g) <= n && in[n - g]) in[n] = true;
    }
  }
  return in;
}

std::set<long> brute_ideal(const std::vector<bool>& s, const std::vector<long>& gens) {
  std::set<long> out;
  for (long g : gens) {
    for (long n = 0; g + n < kLimit; ++n) {
      if (s[n]) out.insert(g + n);
    }
  }
  return out;
}

std::set<long> members(const SemigroupIdeal& i, long below) {
  std::set<long> out;
  for (long n = 0; n < below; ++n) {
    if (i.contains(n)) out.insert(n);
  }
  return out;
}

std::set<long> truncate(const std::set<long>& s, long below) {
  return {s.begin(), s.lower_bound(below)};
}

}  // namespace

TEST_CASE("membership and conductor against dynamic programming") {
  for (const auto& gens : std::vector<std::vector<std::uint32_t>>{{6, 11, 15, 31}, {3, 5}, {4, 6, 9}, {7, 8, 9}}) {
    const NumericalSemigroup s(gens);
    const auto in = brute_semigroup(gens);
    long last_gap = -1;
    for (long n = 0; n < kLimit; ++n) {
      CHECK(s.contains(n) == in[n]);
      if (!in[n]) last_gap = n;
    }
    CHECK(s.conductor() == static_cast<std::uint32_t>(last_gap + 1));
    CHECK_FALSE(s.contains(-1));
  }
  CHECK(NumericalSemigroup({6, 11, 15, 31}).generators() == std::vector<std::uint32_t>{6, 11, 15, 31});
  CHECK(NumericalSemigroup({3, 5, 6, 10}).generators() == std::vector<std::uint32_t>{3, 5});
  CHECK_THROWS_AS(NumericalSemigroup({4, 6}), Error);
}

TEST_CASE("ideal arithmetic agrees with explicit sets") {
  const std::vector<std::uint32_t> gens = {6, 11, 15, 31};
  const auto s = std::make_shared<const NumericalSemigroup>(gens);
  const auto in = brute_semigroup(gens);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint32_t> a, b;
    std::vector<long> la, lb;
    auto element = [&] {  // ideal generators must lie in S
      std::uint32_t e = 0;
      while (e == 0 || !in[e]) e = 1 + rng() % 40;
      return e;
    };
    for (int k = 0; k < 3; ++k) {
      a.push_back(element());
      b.push_back(element());
      la.push_back(a.back());
      lb.push_back(b.back());
    }
    const SemigroupIdeal ia(s, a), ib(s, b);
    const auto sa = brute_ideal(in, la), sb = brute_ideal(in, lb);
    constexpr long kCheck = 200;
    CHECK(members(ia, kCheck) == truncate(sa, kCheck));
    std::set<long> prod, meet;
    for (long x : sa) {
      for (long y : sb) {
        if (x + y < kCheck) prod.insert(x + y);
      }
      if (sb.count(x) && x < kCheck) meet.insert(x);
    }
    CHECK(members(sg_ideal_product(ia, ib), kCheck) == prod);
    CHECK(members(sg_intersection(ia, ib), kCheck) == meet);
    // mu counts exponents not reachable from another element plus a positive element of S
    std::size_t mu = 0;
    for (long x : sa) {
      bool minimal = true;
      for (long y : sa) {
        if (y < x && in[x - y]) minimal = false;
      }
      mu += minimal ? 1 : 0;
    }
    CHECK(sg_mu(ia) == mu);
    CHECK(sg_ideal_power(ia, 2) == sg_ideal_product(ia, ia));
  }
}

TEST_CASE("the standard semigroup facts") {
  const auto s = std::make_shared<const NumericalSemigroup>(std::vector<std::uint32_t>{6, 11, 15, 31});
  const SemigroupIdeal k(s, {6, 11, 31}), l(s, {6});
  const SemigroupIdeal m = sg_maximal_ideal(s);
  CHECK(sg_ideal_power(k, 3) == sg_ideal_product(l, sg_ideal_power(k, 2)));
  CHECK(sg_intersection(sg_ideal_power(k, 2), l) == sg_ideal_product(l, k));
  CHECK(sg_membership(37, sg_ideal_product(m, sg_ideal_power(k, 2))));
  CHECK_FALSE(sg_membership(37, sg_ideal_product(m, sg_ideal_product(l, k))));
  CHECK(valabrega_valla(l, k, 1, 4).status == Verdict::kHolds);
  const HilbertData h = fiber_hilbert(k, 10);
  CHECK(h.form().to_string() == "(1 + 2z)/(1 - z)");
  CHECK(h.values[0] == 1);
  for (std::uint32_t n = 1; n <= 10; ++n) CHECK(h.values[n] == 3);
}

TEST_CASE("unit and maximal ideals") {
  const auto s = std::make_shared<const NumericalSemigroup>(std::vector<std::uint32_t>{3, 5});
  CHECK(sg_unit_ideal(s).contains(0));
  CHECK_FALSE(sg_maximal_ideal(s).contains(0));
  CHECK(sg_mu(sg_maximal_ideal(s)) == 2);
}
