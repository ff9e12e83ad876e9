#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bdforge/errors.hpp"
#include "bdforge/scalars.hpp"

namespace bdforge {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!is_zero(b(k, j))) p(i, j) += aik * b(k, j);
        }
      }
    }
    return p;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] += b.data_[i];
    return d;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix d = a;
    for (std::size_t i = 0; i < d.data_.size(); ++i) d.data_[i] -= b.data_[i];
    return d;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}; free variables are set to unit vectors in
/// increasing column order.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b (free variables zero), or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = F(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

/// Rank accumulator for tall sparse systems: rows are reduced one at a time
/// against the echelon basis collected so far.
template <class F>
class IncrementalRank {
public:
  explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

  /// Returns true if the row was independent of the rows seen so far.
  bool insert(std::vector<F> row) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const std::size_t p = pivot_cols_[k];
      if (is_zero(row[p])) continue;
      const F factor = row[p];
      const auto& b = basis_[k];
      for (std::size_t c = p; c < cols_; ++c) {
        if (!is_zero(b[c])) row[c] -= factor * b[c];
      }
    }
    std::size_t p = 0;
    while (p < cols_ && is_zero(row[p])) ++p;
    if (p == cols_) return false;
    const F inv = F(1) / row[p];
    for (std::size_t c = p; c < cols_; ++c) {
      if (!is_zero(row[c])) row[c] *= inv;
    }
    // keep the basis fully reduced so later rows see unit pivots only
    for (auto& b : basis_) {
      if (is_zero(b[p])) continue;
      const F factor = b[p];
      for (std::size_t c = p; c < cols_; ++c) {
        if (!is_zero(row[c])) b[c] -= factor * row[c];
      }
    }
    basis_.push_back(std::move(row));
    pivot_cols_.push_back(p);
    return true;
  }

  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

private:
  std::size_t cols_;
  std::vector<std::vector<F>> basis_;
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace bdforge
