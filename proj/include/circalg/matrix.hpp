#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "circalg/edge_subset.hpp"
#include "circalg/error.hpp"
#include "circalg/rational.hpp"

namespace circalg {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("matrix expects " + std::to_string(rows_ * cols_) + " entries, got " +
                              std::to_string(entries_.size()));
    }
  }

  static ExactMatrix from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw DimensionMismatch("ragged rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return ExactMatrix(rows.size(), cols, std::move(entries));
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::size_t nonzeros_in_column(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r) n += (*this)(r, c) != 0 ? 1 : 0;
    return n;
  }

  // Columns listed in `subset`, in increasing index order.
  ExactMatrix select_columns(EdgeSubset subset) const {
    const auto picked = subset.elements();
    ExactMatrix out(rows_, picked.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < picked.size(); ++j) out(r, j) = (*this)(r, picked[j]);
    }
    return out;
  }

  RationalVector multiply(const RationalVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
    }
    return out;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// new_row[i] = old row perm[i].
inline ExactMatrix permute_rows(const ExactMatrix& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.rows()) throw DimensionMismatch("row permutation size");
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(perm[i], c);
  }
  return out;
}

// new_col[j] = old column perm[j].
inline ExactMatrix permute_columns(const ExactMatrix& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.cols()) throw DimensionMismatch("column permutation size");
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(r, perm[j]);
  }
  return out;
}

inline ExactMatrix scale_column(ExactMatrix m, std::size_t c, const Rational& s) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) *= s;
  return m;
}

inline ExactMatrix scale_row(ExactMatrix m, std::size_t r, const Rational& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
  return m;
}

namespace detail {

// Reduced row echelon form in place; returns pivot columns in order.
inline std::vector<std::size_t> reduce_to_rref(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Prefer the pivot with the smallest numerator magnitude to limit growth.
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      if (best == m.rows() || abs(m(r, col).get_num()) < abs(m(best, col).get_num())) best = r;
    }
    if (best == m.rows()) continue;
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t matrix_rank(const ExactMatrix& a) {
  ExactMatrix work = a;
  return detail::reduce_to_rref(work).size();
}

// Basis of the right null space {x : a x = 0}, one vector per free column,
// with that free coordinate set to 1.
inline std::vector<RationalVector> kernel_basis(const ExactMatrix& a) {
  ExactMatrix work = a;
  const auto pivots = detail::reduce_to_rref(work);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace circalg
