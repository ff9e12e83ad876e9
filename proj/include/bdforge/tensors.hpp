#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "bdforge/algebra.hpp"
#include "bdforge/errors.hpp"
#include "bdforge/scalars.hpp"

namespace bdforge {

/// Sparse tensor with N legs over a fixed basis. Zero coefficients are never
/// stored; iteration order is lexicographic in the index tuple.
template <class S, std::size_t N>
class Tensor {
public:
  using Key = std::array<int, N>;

  Tensor() = default;

  void add(const Key& k, const S& c) {
    if (bdforge::is_zero(c)) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, c);
      return;
    }
    it->second += c;
    if (bdforge::is_zero(it->second)) coeffs_.erase(it);
  }

  S coeff(const Key& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? S(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
  }
  Tensor& operator*=(const S& s) {
    if (bdforge::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [k, c] : coeffs_) c *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const S& s, Tensor a) { return a *= s; }
  friend Tensor operator-(Tensor a) { return a *= S(-1); }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.coeffs_ == b.coeffs_; }

private:
  std::map<Key, S> coeffs_;
};

template <class S>
using Tensor2 = Tensor<S, 2>;
template <class S>
using Tensor3 = Tensor<S, 3>;

template <class T, class S, std::size_t N>
Tensor<T, N> lift_tensor(const Tensor<S, N>& t) {
  Tensor<T, N> out;
  for (const auto& [k, c] : t) out.add(k, T(c));
  return out;
}

/// x (x) y.
template <class S>
Tensor2<S> outer(const Element<S>& x, const Element<S>& y) {
  Tensor2<S> out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.add({i, j}, a * b);
  return out;
}

/// The transposition x (x) y -> y (x) x.
template <class S>
Tensor2<S> flip(const Tensor2<S>& r) {
  Tensor2<S> out;
  for (const auto& [k, c] : r) out.add({k[1], k[0]}, c);
  return out;
}

/// (ad_a (x) 1 + 1 (x) ad_a)(s).
template <class S>
Tensor2<S> ad_action2(const StructureConstants& sc, const Element<S>& a, const Tensor2<S>& s) {
  Tensor2<S> out;
  for (const auto& [ia, ca] : a) {
    for (const auto& [k, c] : s) {
      const S w = ca * c;
      for (const auto& [m, b] : sc.bracket(ia, k[0])) out.add({m, k[1]}, w * S(b));
      for (const auto& [m, b] : sc.bracket(ia, k[1])) out.add({k[0], m}, w * S(b));
    }
  }
  return out;
}

/// (ad_a (x) 1 (x) 1 + 1 (x) ad_a (x) 1 + 1 (x) 1 (x) ad_a)(t).
template <class S>
Tensor3<S> ad_action3(const StructureConstants& sc, const Element<S>& a, const Tensor3<S>& t) {
  Tensor3<S> out;
  for (const auto& [ia, ca] : a) {
    for (const auto& [k, c] : t) {
      const S w = ca * c;
      for (int leg = 0; leg < 3; ++leg) {
        for (const auto& [m, b] : sc.bracket(ia, k[leg])) {
          auto key = k;
          key[leg] = m;
          out.add(key, w * S(b));
        }
      }
    }
  }
  return out;
}

/// The three summands of the classical Yang-Baxter operator, each written
/// as a sum over pairs of entries of r.
template <class S>
struct CybParts {
  Tensor3<S> r12_r13;  // sum [s_i,s_j] (x) t_i (x) t_j
  Tensor3<S> r12_r23;  // sum s_i (x) [t_i,s_j] (x) t_j
  Tensor3<S> r13_r23;  // sum s_i (x) s_j (x) [t_i,t_j]
};

template <class S>
CybParts<S> cyb_parts(const StructureConstants& sc, const Tensor2<S>& r) {
  CybParts<S> parts;
  for (const auto& [ki, ci] : r) {
    for (const auto& [kj, cj] : r) {
      const S w = ci * cj;
      for (const auto& [m, b] : sc.bracket(ki[0], kj[0])) parts.r12_r13.add({m, ki[1], kj[1]}, w * S(b));
      for (const auto& [m, b] : sc.bracket(ki[1], kj[0])) parts.r12_r23.add({ki[0], m, kj[1]}, w * S(b));
      for (const auto& [m, b] : sc.bracket(ki[1], kj[1])) parts.r13_r23.add({ki[0], kj[0], m}, w * S(b));
    }
  }
  return parts;
}

template <class S>
Tensor3<S> cyb(const StructureConstants& sc, const Tensor2<S>& r) {
  auto p = cyb_parts(sc, r);
  p.r12_r13 += p.r12_r23;
  p.r12_r13 += p.r13_r23;
  return std::move(p.r12_r13);
}

/// (phi (x) psi)(s).
template <class S>
Tensor2<S> apply_map2(const AlgebraMap<S>& phi, const AlgebraMap<S>& psi, const Tensor2<S>& s) {
  if (phi.dimension() != psi.dimension()) throw DimensionMismatch("apply_map2: maps of different size");
  const int n = phi.dimension();
  const auto cphi = phi.sparse_columns();
  const auto cpsi = &phi == &psi ? cphi : psi.sparse_columns();
  Tensor2<S> out;
  for (const auto& [k, c] : s) {
    if (k[0] >= n || k[1] >= n) throw DimensionMismatch("apply_map2: tensor index out of range");
    for (const auto& [i, a] : cphi[k[0]]) {
      const S ca = c * a;
      for (const auto& [j, b] : cpsi[k[1]]) out.add({i, j}, ca * b);
    }
  }
  return out;
}

template <class S>
Tensor2<S> apply_map2(const AlgebraMap<S>& phi, const Tensor2<S>& s) {
  return apply_map2(phi, phi, s);
}

/// Entrywise Galois conjugation.
template <class S, std::size_t N>
Tensor<S, N> conjugate(const Tensor<S, N>& t) {
  Tensor<S, N> out;
  for (const auto& [k, c] : t) out.add(k, conj(c));
  return out;
}

/// Returns lambda with x = lambda * y when such a scalar exists. y must be
/// nonzero; a zero x gives lambda = 0.
template <class S, std::size_t N>
std::optional<S> proportionality(const Tensor<S, N>& x, const Tensor<S, N>& y) {
  if (y.is_zero()) throw InvalidArgument("proportionality against the zero tensor");
  const auto& [k0, c0] = *y.begin();
  const S lambda = x.coeff(k0) / c0;
  Tensor<S, N> diff = x;
  diff -= lambda * y;
  if (!diff.is_zero()) return std::nullopt;
  return lambda;
}

/// Support of the tensor restricted to indices below `bound` in every leg.
template <class S>
bool supported_below(const Tensor2<S>& t, int bound) {
  for (const auto& [k, c] : t)
    if (k[0] >= bound || k[1] >= bound) return false;
  return true;
}

}  // namespace bdforge
