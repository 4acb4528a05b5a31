#include "fibrant/linalg.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "fibrant/errors.hpp"

namespace fibrant {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.field_ == b.field_)) {
    fail(ErrorCode::kStructural, "matrix shape or field mismatch");
  }
  Matrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

namespace {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t modular_rank(const Matrix& src) {
  std::vector<std::vector<Scalar>> m(src.rows(), std::vector<Scalar>(src.cols()));
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) m[i][j] = src.at(i, j);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < src.cols() && r < src.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < src.rows() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == src.rows()) continue;
    std::swap(m[pivot], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < src.rows(); ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < src.cols(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

constexpr std::size_t kDenseLimit = 1U << 14;
constexpr std::uint32_t kFilterPrime = 2147483629U;

// Inserts rows into a reduced echelon table keyed by pivot column.
std::size_t echelon_rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::unordered_map<std::size_t, SparseRow> pivots;
  for (const SparseRow& input : rows) {
    SparseRow row = input;
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const SparseRow& p = it->second;
      const Scalar f = row.front().second;
      SparseRow next;
      next.reserve(row.size() + p.size());
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < row.size() || b < p.size()) {
        if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
          next.push_back(std::move(row[a++]));
        } else if (a == row.size() || p[b].first < row[a].first) {
          next.emplace_back(p[b].first, -(f * p[b].second));
          ++b;
        } else {
          Scalar v = row[a].second - f * p[b].second;
          if (!v.is_zero()) next.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(next);
    }
    if (row.empty()) continue;
    const Scalar inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    std::size_t col = row.front().first;
    pivots.emplace(col, std::move(row));
    if (pivots.size() == cols) break;
  }
  return pivots.size();
}

std::vector<SparseRow> to_sparse(const Matrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) rows[i].emplace_back(j, m.at(i, j));
    }
  }
  return rows;
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t cols, Field field) {
  if (field.is_rational()) {
    const std::size_t full = std::min(rows.size(), cols);
    const Field p = Field::prime(kFilterPrime);
    std::vector<SparseRow> reduced;
    reduced.reserve(rows.size());
    bool ok = true;
    for (const SparseRow& r : rows) {
      SparseRow out;
      for (const auto& [c, v] : r) {
        mpq_class q = v.to_rational();
        if (q.get_den() % kFilterPrime == 0) ok = false;
        Scalar s = Scalar::from_rational(q, p);
        if (!s.is_zero()) out.emplace_back(c, std::move(s));
      }
      reduced.push_back(std::move(out));
    }
    // The rank mod p never exceeds the rank over QQ.
    if (ok && echelon_rank(reduced, cols) == full) return full;
  }
  return echelon_rank(rows, cols);
}

std::optional<std::vector<Scalar>> kernel_vector(const std::vector<std::vector<Scalar>>& rows, Field field) {
  const std::size_t n = rows.size();
  // Each reduced row carries the combination of inputs producing it.
  std::vector<std::pair<std::vector<Scalar>, std::vector<Scalar>>> reduced;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> v = rows[i];
    std::vector<Scalar> combo(n, Scalar::zero(field));
    combo[i] = Scalar::one(field);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Scalar f = v[pivot_cols[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * reduced[k].first[j];
      for (std::size_t j = 0; j < n; ++j) combo[j] -= f * reduced[k].second[j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return combo;
    const Scalar inv = v[p].inverse();
    for (Scalar& x : v) x *= inv;
    for (Scalar& x : combo) x *= inv;
    reduced.emplace_back(std::move(v), std::move(combo));
    pivot_cols.push_back(p);
  }
  return std::nullopt;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() * m.cols() > kDenseLimit) return sparse_rank(to_sparse(m), m.cols(), m.field());
  if (!m.field().is_rational()) return modular_rank(m);
  // Clear denominators row by row, then eliminate without fractions.
  std::vector<std::vector<mpz_class>> ints(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(i, j).to_rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class v = m.at(i, j).to_rational() * den;
      ints[i][j] = v.get_num();
    }
  }
  return bareiss_rank(std::move(ints));
}

std::pair<Polynomial, std::vector<Scalar>> LinearBasis::reduce(const Polynomial& v) const {
  Polynomial rest = v;
  std::vector<Scalar> combo(inputs_, Scalar::zero(sig_.field));
  const Monomial one(sig_.nvars);
  for (const Row& row : rows_) {
    Scalar c = rest.coefficient(row.vec.leading_monomial());
    if (c.is_zero()) continue;
    rest.subtract_scaled(c, one, row.vec);
    for (std::size_t k = 0; k < row.combo.size(); ++k) {
      if (!row.combo[k].is_zero()) combo[k] -= c * row.combo[k];
    }
  }
  return {std::move(rest), std::move(combo)};
}

bool LinearBasis::insert(const Polynomial& v) {
  if (!(v.signature() == sig_)) fail(ErrorCode::kStructural, "vector signature mismatch");
  auto [rest, combo] = reduce(v);
  const std::size_t index = inputs_++;
  for (Row& row : rows_) row.combo.resize(inputs_, Scalar::zero(sig_.field));
  if (rest.is_zero()) return false;
  // rest = v - sum(...) so rest corresponds to input_index + combo.
  combo.resize(inputs_, Scalar::zero(sig_.field));
  combo[index] = Scalar::one(sig_.field);
  Scalar inv = rest.leading_coefficient().inverse();
  rest = rest.scaled(inv);
  for (Scalar& s : combo) s *= inv;
  const Monomial one(sig_.nvars);
  const Monomial& pivot = rest.leading_monomial();
  for (Row& row : rows_) {
    Scalar c = row.vec.coefficient(pivot);
    if (c.is_zero()) continue;
    row.vec.subtract_scaled(c, one, rest);
    for (std::size_t k = 0; k < inputs_; ++k) {
      if (!combo[k].is_zero()) row.combo[k] -= c * combo[k];
    }
  }
  rows_.push_back(Row{std::move(rest), std::move(combo)});
  return true;
}

std::optional<std::vector<Scalar>> LinearBasis::coordinates(const Polynomial& v) const {
  auto [rest, combo] = reduce(v);
  if (!rest.is_zero()) return std::nullopt;
  // reduce() tracked -(coefficients); v = sum c * input.
  for (Scalar& s : combo) s = -s;
  return combo;
}

bool LinearBasis::contains(const Polynomial& v) const { return reduce(v).first.is_zero(); }

}  // namespace fibrant
