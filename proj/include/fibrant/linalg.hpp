#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fibrant/polynomial.hpp"
#include "fibrant/scalar.hpp"

namespace fibrant {

/// Dense matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination over QQ, plain elimination mod p.
/// Large matrices go through sparse_rank.
std::size_t rank(const Matrix& m);

/// Sparse row: (column, nonzero entry) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
/// Rank of sparse rows with `cols` columns. Over QQ a rank computed modulo a
/// large prime settles full-rank cases; otherwise elimination is exact.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t cols, Field field);

/// Nonzero c with sum c_i rows_i = 0, or nullopt when the rows are independent.
std::optional<std::vector<Scalar>> kernel_vector(const std::vector<std::vector<Scalar>>& rows, Field field);

/// Row-reduced family of polynomials viewed as vectors in the monomial basis.
/// Each stored row remembers its expression in terms of the inserted inputs,
/// so membership queries can also return coordinates.
class LinearBasis {
 public:
  explicit LinearBasis(const RingSignature& sig) : sig_(sig) {}

  /// Inserts v; returns true when v was independent of earlier inputs.
  bool insert(const Polynomial& v);
  std::size_t dimension() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }

  /// Coefficients c with v = sum c_i * input_i among the independent inputs
  /// (indexed by insertion order), or nullopt when v is outside the span.
  std::optional<std::vector<Scalar>> coordinates(const Polynomial& v) const;
  bool contains(const Polynomial& v) const;

 private:
  struct Row {
    Polynomial vec;                // pivot = leading monomial, coefficient 1
    std::vector<Scalar> combo;     // over all inputs seen so far
  };
  std::pair<Polynomial, std::vector<Scalar>> reduce(const Polynomial& v) const;

  RingSignature sig_;
  std::vector<Row> rows_;
  std::size_t inputs_ = 0;
};

}  // namespace fibrant
