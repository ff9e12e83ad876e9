#include "bdforge/algebra.hpp"

#include <array>

namespace bdforge {

std::optional<std::pair<int, int>> StructureConstants::antisymmetry_violation() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      Element<Rational> s;
      for (const auto& [k, c] : bracket(i, j)) s.add(k, c);
      for (const auto& [k, c] : bracket(j, i)) s.add(k, c);
      if (!s.is_zero()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> StructureConstants::jacobi_violation() const {
  auto basis = [](int i) { return Element<Rational>::basis(i); };
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const auto bij = bracket(basis(i), basis(j));
      for (int k = j + 1; k < dim_; ++k) {
        Element<Rational> sum = bracket(basis(k), bij);
        sum += bracket(basis(i), bracket(basis(j), basis(k)));
        sum += bracket(basis(j), bracket(basis(k), basis(i)));
        if (!sum.is_zero()) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

Matrix<Rational> StructureConstants::ad_matrix(int i) const {
  Matrix<Rational> m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (const auto& [k, c] : bracket(i, j)) m(k, j) = c;
  return m;
}

Matrix<Rational> StructureConstants::killing_form() const {
  // tr(ad_i ad_j) = sum_k sum_m c_{jk}^m c_{im}^k
  Matrix<Rational> kf(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      Rational tr;
      for (int k = 0; k < dim_; ++k) {
        for (const auto& [m, c] : bracket(j, k)) {
          for (const auto& [kk, c2] : bracket(i, m))
            if (kk == k) tr += c * c2;
        }
      }
      kf(i, j) = tr;
      kf(j, i) = tr;
    }
  }
  return kf;
}

}  // namespace bdforge
