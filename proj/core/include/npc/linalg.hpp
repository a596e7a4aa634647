#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "npc/numeric.hpp"

namespace npc {

/// Dense row-major matrix over an exact field (Rational64 or BigRational).
template <class Q>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Q& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Q& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  template <class Int>
  static Matrix from_integers(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Q(static_cast<std::int64_t>(rows[r][c]));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Q> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class Q>
std::vector<std::size_t> row_reduce(Matrix<Q>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Q inv = Q(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Q factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Q>
std::size_t rank(Matrix<Q> m) {
  return row_reduce(m).size();
}

/// Basis of the right kernel {x : m x = 0}, returned as the columns of a matrix.
template <class Q>
Matrix<Q> nullspace(Matrix<Q> m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Q> basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = Q(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, f);
  }
  return basis;
}

template <class Q>
Matrix<Q> multiply(const Matrix<Q>& a, const Matrix<Q>& b) {
  Matrix<Q> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

/// Horizontal concatenation [a | b]; row counts must agree.
template <class Q>
Matrix<Q> hconcat(const Matrix<Q>& a, const Matrix<Q>& b) {
  Matrix<Q> out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

/// Integer matrix description of one degree of a cochain map, used by the
/// cohomology code. All matrices act on column vectors.
struct CochainDegree {
  std::vector<std::vector<std::int64_t>> d_in;   // C^{k-1} -> C^k  (dim C^k rows)
  std::vector<std::vector<std::int64_t>> d_out;  // C^k -> C^{k+1}  (dim C^{k+1} rows)
  std::size_t dim_prev = 0;
  std::size_t dim_cur = 0;
  std::size_t dim_next = 0;
};

/// dim H^k = dim C^k - rank d_out - rank d_in.
std::size_t cohomology_dimension(const CochainDegree& deg);

/// Rank of the map on H^k induced by a cochain map `f : C^k -> C'^k` (dim C'^k rows).
/// The map is injective on H^k exactly when this equals cohomology_dimension(source).
std::size_t induced_rank(const CochainDegree& source, const CochainDegree& target,
                         const std::vector<std::vector<std::int64_t>>& f);

/// Exact rank over the rationals of an integer matrix with `cols` columns.
std::size_t exact_rank(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

}  // namespace npc
