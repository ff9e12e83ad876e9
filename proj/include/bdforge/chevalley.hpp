#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bdforge/algebra.hpp"
#include "bdforge/errors.hpp"
#include "bdforge/linalg.hpp"
#include "bdforge/rootsys.hpp"
#include "bdforge/scalars.hpp"
#include "bdforge/tensors.hpp"

namespace bdforge {

/// Split simple Lie algebra over Q in a Chevalley basis.
///
/// Basis layout: indices 0..r-1 are H_1..H_r, then X_alpha for the positive
/// roots in RootSystem order, then X_{-alpha} in the same order. Brackets:
///   [H_i, X_a]     = <a, alpha_i^vee> X_a
///   [X_a, X_{-a}]  = H_a (the coroot of a, for a > 0)
///   [X_a, X_b]     = N_{a,b} X_{a+b}
/// The integers N_{a,b} are fixed by taking N = +(p+1) on extraspecial pairs.
class ChevalleyAlgebra {
public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  const StructureConstants& structure() const { return sc_; }
  int dimension() const { return sc_.dimension(); }
  int rank() const { return rs_.rank(); }

  int h_index(int i) const { return i; }
  int pos_index(int k) const { return rank() + k; }
  int neg_index(int k) const { return rank() + rs_.num_positive() + k; }
  /// Basis index of X_root (root positive or negative).
  int root_index(const Root& root) const;
  bool is_cartan(int index) const { return index < rank(); }
  /// Root of the basis vector (the zero vector for H_i).
  Root weight(int index) const;
  /// Basis index of X_{-a} for the root vector X_a, H_i for H_i.
  int opposite(int index) const;

  /// N_{a,b}; zero when a+b is not a root.
  long structure_constant(const Root& a, const Root& b) const;

  /// Human readable name: "H1", "X[1,1]", "X[-1,0]".
  std::string basis_label(int index) const;

  Element<Rational> basis(int index) const { return Element<Rational>::basis(index); }

  const Matrix<Rational>& killing() const { return killing_; }
  const Matrix<Rational>& killing_inverse() const { return killing_inv_; }
  Rational killing(int i, int j) const { return killing_(i, j); }

  /// Casimir element sum (K^{-1})_{ij} b_i (x) b_j.
  const Tensor2<Rational>& omega() const { return omega_; }
  /// Cartan part of omega.
  const Tensor2<Rational>& omega_h() const { return omega_h_; }

  /// Coordinates of the coroot H_a (a > 0) on H_1..H_r.
  std::vector<Rational> coroot(const Root& a) const;

  /// For every non-simple positive root (by index): (i, k) with
  /// X_beta = [X_{alpha_i}, X_{beta'}] / N, beta' = positive_roots()[k].
  struct Decomposition {
    int simple;
    int rest;
  };
  const std::vector<Decomposition>& decompositions() const { return decomp_; }

private:
  void compute_structure_constants();
  void build_brackets();
  void build_killing_and_casimir();

  RootSystem rs_;
  StructureConstants sc_;
  std::vector<std::vector<long>> n_pos_;  // N_{a,b}, a,b positive indices
  std::vector<Decomposition> decomp_;
  Matrix<Rational> killing_;
  Matrix<Rational> killing_inv_;
  Tensor2<Rational> omega_;
  Tensor2<Rational> omega_h_;
};

ChevalleyAlgebra build_chevalley(char type, int rank);

/// Returns (Omega, Omega_h).
std::pair<Tensor2<Rational>, Tensor2<Rational>> casimir(const ChevalleyAlgebra& g);

/// First basis triple (a, x, y) with K([a,x],y) + K(x,[a,y]) != 0, or nullopt.
std::optional<std::array<int, 3>> killing_invariance_violation(const ChevalleyAlgebra& g);

/// Kernel of s -> (a -> (ad_a (x) 1 + 1 (x) ad_a)(s)) on g (x) g.
struct CasimirKernel {
  int dimension = 0;
  bool contains_omega = false;
};

/// Exact rank computation. The map preserves the weight grading of g (x) g,
/// so its matrix is block diagonal and each weight block is reduced
/// separately.
CasimirKernel casimir_kernel(const ChevalleyAlgebra& g);

/// Classical |Delta| for the type: A_n n(n+1), B_n and C_n 2n^2, D_n
/// 2n(n-1), G2 12.
int classical_root_count(char type, int rank);

/// chi: H -> -H, X_a -> -X_{-a}.
AlgebraMap<Rational> chevalley_automorphism(const ChevalleyAlgebra& g);

/// Lie algebra map determined by the images of X_{alpha_i} and X_{-alpha_i}.
/// Throws NotLieMorphism when the resulting linear map does not preserve
/// brackets.
template <class S>
AlgebraMap<S> extend_from_generators(const ChevalleyAlgebra& g, const std::vector<Element<S>>& e_images,
                                     const std::vector<Element<S>>& f_images);

/// pi-hat: H_i -> H_{pi(i)}, X_{alpha_i} -> X_{alpha_{pi(i)}}, X_{-alpha_i} ->
/// X_{-alpha_{pi(i)}}, extended to a Lie algebra automorphism.
AlgebraMap<Rational> lift_diagram_automorphism(const ChevalleyAlgebra& g, const DiagramAutomorphism& pi);

/// Point of the adjoint torus: alpha(t) = prod t_i^{n_i}.
template <class S>
class TorusElement {
public:
  TorusElement() = default;
  explicit TorusElement(std::vector<S> t) : t_(std::move(t)) {
    for (const auto& x : t_)
      if (is_zero(x)) throw InvalidArgument("torus coordinates must be nonzero");
  }
  static TorusElement identity(int rank) { return TorusElement(std::vector<S>(rank, S(1))); }

  int rank() const { return static_cast<int>(t_.size()); }
  const std::vector<S>& coords() const { return t_; }
  const S& operator[](int i) const { return t_[i]; }

  S character(const Root& root) const {
    S out(1);
    for (int i = 0; i < rank(); ++i) {
      int n = root[i];
      const S& base = n >= 0 ? t_[i] : S(1) / t_[i];
      for (n = n < 0 ? -n : n; n > 0; --n) out *= base;
    }
    return out;
  }

private:
  std::vector<S> t_;
};

/// Ad_t: identity on the Cartan subalgebra, X_a -> a(t) X_a.
template <class S>
AlgebraMap<S> torus_adjoint(const ChevalleyAlgebra& g, const TorusElement<S>& t) {
  if (t.rank() != g.rank()) throw DimensionMismatch("torus element has the wrong rank");
  Matrix<S> m(g.dimension(), g.dimension());
  for (int i = 0; i < g.dimension(); ++i) m(i, i) = g.is_cartan(i) ? S(1) : t.character(g.weight(i));
  return AlgebraMap<S>(std::move(m));
}

template <class S>
AlgebraMap<S> extend_from_generators(const ChevalleyAlgebra& g, const std::vector<Element<S>>& e_images,
                                     const std::vector<Element<S>>& f_images) {
  const int r = g.rank();
  if (static_cast<int>(e_images.size()) != r || static_cast<int>(f_images.size()) != r) {
    throw DimensionMismatch("need one image per simple root");
  }
  const auto& sc = g.structure();
  const auto& pos = g.root_system().positive_roots();
  std::vector<Element<S>> cols(g.dimension());
  for (int i = 0; i < r; ++i) {
    cols[g.pos_index(i)] = e_images[i];
    cols[g.neg_index(i)] = f_images[i];
    cols[g.h_index(i)] = sc.bracket(e_images[i], f_images[i]);
  }
  for (int k = r; k < static_cast<int>(pos.size()); ++k) {
    const auto [i, rest] = g.decompositions()[k];
    const Root ai = g.root_system().simple_root(i);
    const long np = g.structure_constant(ai, pos[rest]);
    const long nn = g.structure_constant(negate(ai), negate(pos[rest]));
    Element<S> xp = sc.bracket(cols[g.pos_index(i)], cols[g.pos_index(rest)]);
    Element<S> xn = sc.bracket(cols[g.neg_index(i)], cols[g.neg_index(rest)]);
    xp *= S(Rational(1, np));
    xn *= S(Rational(1, nn));
    cols[g.pos_index(k)] = std::move(xp);
    cols[g.neg_index(k)] = std::move(xn);
  }
  AlgebraMap<S> f = AlgebraMap<S>::from_columns(cols);
  if (auto bad = f.bracket_violation(sc)) {
    throw NotLieMorphism("generator images do not extend to a Lie morphism (fails on basis pair " +
                         std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")");
  }
  return f;
}

}  // namespace bdforge
