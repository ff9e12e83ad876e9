#pragma once

#include <optional>
#include <vector>

#include "bdforge/bialgebra.hpp"
#include "bdforge/chevalley.hpp"
#include "bdforge/linalg.hpp"
#include "bdforge/twist.hpp"

namespace bdforge {

/// The Chevalley basis of A_{n-1} realized by n x n traceless rational
/// matrices: H_i = E_ii - E_{i+1,i+1}, X_{alpha_i} = E_{i,i+1},
/// X_{-alpha_i} = E_{i+1,i}, other root vectors by iterated commutators.
class MatrixRealization {
public:
  /// Throws UnsupportedRank unless 2 <= n <= 4.
  explicit MatrixRealization(int n);

  int n() const { return n_; }
  const ChevalleyAlgebra& algebra() const { return g_; }
  const Matrix<Rational>& matrix(int basis_index) const { return mats_[basis_index]; }
  /// Coordinates of a traceless matrix in the basis; throws InvalidArgument
  /// if the matrix is not traceless.
  Element<Rational> coordinates(const Matrix<Rational>& m) const;
  /// x -> x^t as a linear map on the basis.
  const AlgebraMap<Rational>& transpose_map() const { return transpose_; }

  /// First basis pair whose matrix commutator disagrees with the abstract
  /// bracket, or nullopt.
  std::optional<std::pair<int, int>> commutator_violation() const;

private:
  int n_;
  ChevalleyAlgebra g_;
  std::vector<Matrix<Rational>> mats_;
  Matrix<Rational> vectorized_;  // column j is mats_[j] flattened row-major
  AlgebraMap<Rational> transpose_;
};

MatrixRealization sl_realization(int n);

/// u(x) = -x^t over Q(sqrt d).
GaloisCocycle unitary_cocycle(const MatrixRealization& m, long d);

enum class AlphaClass { Rational, SqrtD };

const char* alpha_class_name(AlphaClass a);

/// Galois-fixed subspace {x : u(conj x) = x} with its rational structure.
struct DescendedForm {
  GaloisCocycle cocycle;
  std::vector<Element<QuadExt>> basis;  // over L, in the Chevalley coordinates
  StructureConstants structure;         // brackets of the K-basis, rational
  std::optional<Cobracket<Rational>> delta_prime;
};

/// Throws DimensionMismatch if the fixed space has the wrong K-dimension and
/// NotClosed if brackets of fixed vectors leave the K-span.
DescendedForm fixed_points(const StructureConstants& sc, const GaloisCocycle& cocycle);

/// Coordinates of an L-vector in the K-basis of the form (nullopt if some
/// coordinate is irrational or the vector is outside the span).
std::optional<std::vector<Rational>> form_coordinates(const DescendedForm& form, const Element<QuadExt>& x);

DescentCase pfields_decide(const Tensor2<Rational>& r, const GaloisCocycle& cocycle, AlphaClass alpha);

/// alpha * coboundary(r) on the K-basis of the form, written in that basis.
/// alpha is 1 for AlphaClass::Rational and sqrt(d) for AlphaClass::SqrtD.
/// Throws InvalidArgument unless pfields_decide gives a descent case and
/// NotClosed if a value leaves form (x) form. Asserts the bialgebra axioms
/// over K (AxiomViolation).
Cobracket<Rational> descend_cobracket(const StructureConstants& sc, const Tensor2<Rational>& r,
                                      const GaloisCocycle& cocycle, const DescendedForm& form, AlphaClass alpha);

/// delta' pushed back to g over L: value on the standard basis vector b_i.
Cobracket<QuadExt> reextend(const DescendedForm& form, const Cobracket<Rational>& delta_prime);

}  // namespace bdforge
