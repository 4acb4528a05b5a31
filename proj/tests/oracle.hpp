// Brute-force reference implementations for small monomial ideals and exact
// rank. Nothing here calls into the library's algorithms.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Exp = std::vector<int>;
using Gens = std::vector<Exp>;

inline bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline bool contains(const Gens& g, const Exp& m) {
  return std::any_of(g.begin(), g.end(), [&](const Exp& x) { return divides(x, m); });
}

inline Gens minimal(const Gens& g) {
  std::set<Exp> uniq(g.begin(), g.end());
  Gens out;
  for (const Exp& a : uniq) {
    bool redundant = false;
    for (const Exp& b : uniq) {
      if (b != a && divides(b, a)) redundant = true;
    }
    if (!redundant) out.push_back(a);
  }
  return out;  // sorted, since std::set iterates in order
}

inline Gens product(const Gens& a, const Gens& b) {
  Gens out;
  for (const Exp& x : a) {
    for (const Exp& y : b) {
      Exp z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      out.push_back(z);
    }
  }
  return minimal(out);
}

inline Gens power(const Gens& a, int n) {
  Gens acc = {Exp(a.front().size(), 0)};
  for (int k = 0; k < n; ++k) acc = product(acc, a);
  return acc;
}

/// Calls f on every exponent vector with 0 <= e_i <= bound_i.
inline void each_in_box(const Exp& bound, const std::function<void(const Exp&)>& f) {
  Exp e(bound.size(), 0);
  while (true) {
    f(e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

inline Exp max_exponents(const Gens& a, const Gens& b = {}) {
  Exp m(a.front().size(), 0);
  for (const Gens* g : {&a, &b}) {
    for (const Exp& x : *g) {
      for (std::size_t i = 0; i < x.size(); ++i) m[i] = std::max(m[i], x[i]);
    }
  }
  return m;
}

/// Minimal generators of a meet b found by scanning the bounding box.
inline Gens intersection(const Gens& a, const Gens& b) {
  Gens found;
  each_in_box(max_exponents(a, b), [&](const Exp& e) {
    if (contains(a, e) && contains(b, e)) found.push_back(e);
  });
  return minimal(found);
}

/// (a : b), scanning monomials no larger than the exponents of a.
inline Gens quotient(const Gens& a, const Gens& b) {
  Gens found;
  each_in_box(max_exponents(a), [&](const Exp& u) {
    bool ok = true;
    for (const Exp& g : b) {
      Exp ug(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) ug[i] = u[i] + g[i];
      ok = ok && contains(a, ug);
    }
    if (ok) found.push_back(u);
  });
  return minimal(found);
}

/// Number of monomials outside the ideal; -1 when infinite.
inline long colength(const Gens& a) {
  const std::size_t n = a.front().size();
  Exp bound(n, -1);
  for (const Exp& x : a) {
    int support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) return 0;
    if (support == 1 && (bound[var] < 0 || x[var] - 1 < bound[var])) bound[var] = x[var] - 1;
  }
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return -1;
  long count = 0;
  each_in_box(bound, [&](const Exp& e) { count += contains(a, e) ? 0 : 1; });
  return count;
}

/// Rank over QQ by textbook Gaussian elimination on mpq_class.
inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Random monomial ideal in n variables with total degrees at most maxdeg.
inline Gens random_ideal(std::mt19937_64& rng, std::size_t n, int maxdeg, int count) {
  Gens g;
  for (int k = 0; k < count; ++k) {
    Exp e(n, 0);
    const int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxdeg));
    for (int d = 0; d < deg; ++d) ++e[rng() % n];
    g.push_back(e);
  }
  return minimal(g);
}

}  // namespace oracle
