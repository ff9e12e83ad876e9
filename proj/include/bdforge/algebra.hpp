#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bdforge/errors.hpp"
#include "bdforge/linalg.hpp"
#include "bdforge/scalars.hpp"

namespace bdforge {

/// Sparse linear combination of basis vectors. Zero coefficients are never
/// stored.
template <class S>
class Element {
public:
  Element() = default;

  static Element basis(int index, S coeff = S(1)) {
    Element e;
    e.add(index, std::move(coeff));
    return e;
  }

  void add(int index, const S& coeff) {
    if (bdforge::is_zero(coeff)) return;
    auto it = coeffs_.find(index);
    if (it == coeffs_.end()) {
      coeffs_.emplace(index, coeff);
      return;
    }
    it->second += coeff;
    if (bdforge::is_zero(it->second)) coeffs_.erase(it);
  }

  S coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  Element& operator+=(const Element& o) {
    for (const auto& [i, c] : o.coeffs_) add(i, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [i, c] : o.coeffs_) add(i, -c);
    return *this;
  }
  Element& operator*=(const S& s) {
    if (bdforge::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [i, c] : coeffs_) c *= s;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const S& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= S(-1); }
  friend bool operator==(const Element& a, const Element& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::map<int, S> coeffs_;
};

template <class T, class S>
Element<T> lift_element(const Element<S>& e) {
  Element<T> out;
  for (const auto& [i, c] : e) out.add(i, T(c));
  return out;
}

/// Structure constants of a Lie algebra over Q in a fixed basis:
/// [b_i, b_j] = sum_k c_ij^k b_k.
class StructureConstants {
public:
  using Row = std::vector<std::pair<int, Rational>>;

  StructureConstants() = default;
  explicit StructureConstants(int dim) : dim_(dim), table_(static_cast<std::size_t>(dim) * dim) {}

  int dimension() const { return dim_; }

  const Row& bracket(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set_bracket(int i, int j, Row value) { table_[static_cast<std::size_t>(i) * dim_ + j] = std::move(value); }

  template <class S>
  Element<S> bracket(const Element<S>& x, const Element<S>& y) const {
    Element<S> out;
    for (const auto& [i, ci] : x) {
      for (const auto& [j, cj] : y) {
        const S cij = ci * cj;
        for (const auto& [k, c] : bracket(i, j)) out.add(k, cij * S(c));
      }
    }
    return out;
  }

  /// First ordered basis pair violating antisymmetry, or nullopt.
  std::optional<std::pair<int, int>> antisymmetry_violation() const;
  /// First basis triple (i<j<k) violating the Jacobi identity, or nullopt.
  std::optional<std::array<int, 3>> jacobi_violation() const;
  /// Number of unordered distinct basis triples checked by jacobi_violation.
  long jacobi_triple_count() const {
    const long n = dim_;
    return n * (n - 1) * (n - 2) / 6;
  }

  /// Matrix of ad_{b_i}: column j holds the coordinates of [b_i, b_j].
  Matrix<Rational> ad_matrix(int i) const;
  /// trace(ad_x ad_y) on the basis.
  Matrix<Rational> killing_form() const;

private:
  int dim_ = 0;
  std::vector<Row> table_;
};

/// Linear endomorphism of the algebra given by a dense square matrix whose
/// column j holds the image of basis vector j.
template <class S>
class AlgebraMap {
public:
  AlgebraMap() = default;
  explicit AlgebraMap(int dim) : m_(dim, dim) {}
  explicit AlgebraMap(Matrix<S> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("algebra map must be square");
  }

  static AlgebraMap identity(int dim) { return AlgebraMap(Matrix<S>::identity(dim)); }

  /// Builds the map from the images of every basis vector.
  static AlgebraMap from_columns(const std::vector<Element<S>>& images) {
    const int n = static_cast<int>(images.size());
    AlgebraMap f(n);
    for (int j = 0; j < n; ++j)
      for (const auto& [i, c] : images[j]) f.m_(i, j) = c;
    return f;
  }

  int dimension() const { return static_cast<int>(m_.rows()); }
  const Matrix<S>& matrix() const { return m_; }
  const S& entry(int row, int col) const { return m_(row, col); }

  Element<S> column(int j) const {
    Element<S> e;
    for (int i = 0; i < dimension(); ++i) e.add(i, m_(i, j));
    return e;
  }

  /// Nonzero entries of every column as (row, value) lists.
  std::vector<std::vector<std::pair<int, S>>> sparse_columns() const {
    std::vector<std::vector<std::pair<int, S>>> cols(dimension());
    for (int j = 0; j < dimension(); ++j)
      for (int i = 0; i < dimension(); ++i)
        if (!is_zero(m_(i, j))) cols[j].emplace_back(i, m_(i, j));
    return cols;
  }

  Element<S> apply(const Element<S>& x) const {
    Element<S> out;
    for (const auto& [j, c] : x)
      for (int i = 0; i < dimension(); ++i)
        if (!is_zero(m_(i, j))) out.add(i, c * m_(i, j));
    return out;
  }

  /// (*this) o other.
  AlgebraMap compose(const AlgebraMap& other) const { return AlgebraMap(m_ * other.m_); }

  std::optional<AlgebraMap> inverse() const {
    auto inv = bdforge::inverse(m_);
    if (!inv) return std::nullopt;
    return AlgebraMap(std::move(*inv));
  }

  /// Entrywise Galois conjugation.
  AlgebraMap conjugate() const {
    AlgebraMap c = *this;
    for (int i = 0; i < dimension(); ++i)
      for (int j = 0; j < dimension(); ++j) c.m_(i, j) = conj(m_(i, j));
    return c;
  }

  AlgebraMap scaled(const S& s) const {
    AlgebraMap c = *this;
    for (int i = 0; i < dimension(); ++i)
      for (int j = 0; j < dimension(); ++j) c.m_(i, j) *= s;
    return c;
  }

  template <class T>
  AlgebraMap<T> lift() const {
    Matrix<T> m(m_.rows(), m_.cols());
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j) m(i, j) = T(m_(i, j));
    return AlgebraMap<T>(std::move(m));
  }

  bool is_identity() const { return m_ == Matrix<S>::identity(m_.rows()); }

  /// First basis pair (i, j) with f([b_i,b_j]) != [f b_i, f b_j], or nullopt.
  std::optional<std::pair<int, int>> bracket_violation(const StructureConstants& sc) const {
    std::vector<Element<S>> cols;
    cols.reserve(dimension());
    for (int j = 0; j < dimension(); ++j) cols.push_back(column(j));
    for (int i = 0; i < dimension(); ++i) {
      for (int j = i + 1; j < dimension(); ++j) {
        Element<S> lhs;
        for (const auto& [k, c] : sc.bracket(i, j)) lhs += S(c) * cols[k];
        if (!(lhs == sc.bracket(cols[i], cols[j]))) return std::make_pair(i, j);
      }
    }
    return std::nullopt;
  }

  bool is_automorphism(const StructureConstants& sc) const {
    return !bracket_violation(sc) && rank(m_) == m_.rows();
  }

  friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) { return a.m_ == b.m_; }

private:
  Matrix<S> m_;
};

}  // namespace bdforge
