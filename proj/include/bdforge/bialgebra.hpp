#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdforge/algebra.hpp"
#include "bdforge/chevalley.hpp"
#include "bdforge/errors.hpp"
#include "bdforge/tensors.hpp"

namespace bdforge {

/// Linear map delta: g -> g (x) g given by its values on the basis.
template <class S>
struct Cobracket {
  std::vector<Tensor2<S>> values;

  int dimension() const { return static_cast<int>(values.size()); }

  Tensor2<S> apply(const Element<S>& x) const {
    Tensor2<S> out;
    for (const auto& [i, c] : x) out += c * values[i];
    return out;
  }

  bool is_zero() const {
    for (const auto& v : values)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Cobracket& a, const Cobracket& b) { return a.values == b.values; }
};

/// Outcome of the three Lie bialgebra axiom checks. A witness is the first
/// basis element (or first basis pair for the cocycle condition) on which the
/// axiom fails, -1 when it holds.
struct AxiomReport {
  bool antisymmetric = true;
  bool cojacobi = true;
  bool cocycle = true;
  int antisymmetry_witness = -1;
  int cojacobi_witness = -1;
  std::pair<int, int> cocycle_witness{-1, -1};

  bool ok() const { return antisymmetric && cojacobi && cocycle; }
};

/// (delta (x) id)(t) for t in g (x) g.
template <class S>
Tensor3<S> delta_left(const Cobracket<S>& delta, const Tensor2<S>& t) {
  Tensor3<S> out;
  for (const auto& [k, c] : t)
    for (const auto& [m, v] : delta.values[k[0]]) out.add({m[0], m[1], k[1]}, c * v);
  return out;
}

/// (id (x) delta)(t) for t in g (x) g.
template <class S>
Tensor3<S> delta_right(const Cobracket<S>& delta, const Tensor2<S>& t) {
  Tensor3<S> out;
  for (const auto& [k, c] : t)
    for (const auto& [m, v] : delta.values[k[1]]) out.add({k[0], m[0], m[1]}, c * v);
  return out;
}

/// (id (x) flip) on g (x) g (x) g.
template <class S>
Tensor3<S> flip23(const Tensor3<S>& t) {
  Tensor3<S> out;
  for (const auto& [k, c] : t) out.add({k[0], k[2], k[1]}, c);
  return out;
}

template <class S>
bool cojacobi_holds_on(const Cobracket<S>& delta, int i) {
  const Tensor2<S>& dx = delta.values[i];
  const Tensor3<S> left = delta_left(delta, dx);
  Tensor3<S> rhs = delta_right(delta, dx);
  rhs += flip23(left);
  return left == rhs;
}

template <class S>
AxiomReport check_bialgebra_axioms(const StructureConstants& sc, const Cobracket<S>& delta) {
  if (delta.dimension() != sc.dimension()) throw DimensionMismatch("cobracket and algebra differ in dimension");
  AxiomReport rep;
  const int n = sc.dimension();
  for (int i = 0; i < n && rep.antisymmetric; ++i) {
    if (!(flip(delta.values[i]) == -delta.values[i])) {
      rep.antisymmetric = false;
      rep.antisymmetry_witness = i;
    }
  }
  for (int i = 0; i < n && rep.cojacobi; ++i) {
    if (!cojacobi_holds_on(delta, i)) {
      rep.cojacobi = false;
      rep.cojacobi_witness = i;
    }
  }
  for (int i = 0; i < n && rep.cocycle; ++i) {
    const auto bi = Element<S>::basis(i);
    for (int j = i + 1; j < n; ++j) {
      const auto bj = Element<S>::basis(j);
      Tensor2<S> lhs = delta.apply(sc.bracket(bi, bj));
      Tensor2<S> rhs = ad_action2(sc, bi, delta.values[j]) - ad_action2(sc, bj, delta.values[i]);
      if (!(lhs == rhs)) {
        rep.cocycle = false;
        rep.cocycle_witness = {i, j};
        break;
      }
    }
  }
  return rep;
}

/// delta(a) = (ad_a (x) 1 + 1 (x) ad_a)(r) on every basis element.
template <class S>
Cobracket<S> coboundary(const StructureConstants& sc, const Tensor2<S>& r) {
  Cobracket<S> delta;
  delta.values.reserve(sc.dimension());
  for (int i = 0; i < sc.dimension(); ++i) delta.values.push_back(ad_action2(sc, Element<S>::basis(i), r));
  return delta;
}

/// The coboundary cobracket of r. With `assert_axioms` set, the three axioms
/// are checked and the first failure is raised as AxiomViolation.
template <class S>
Cobracket<S> cobracket_from_r(const StructureConstants& sc, const Tensor2<S>& r, bool assert_axioms = true) {
  Cobracket<S> delta = coboundary(sc, r);
  if (assert_axioms) {
    const AxiomReport rep = check_bialgebra_axioms(sc, delta);
    if (!rep.antisymmetric) throw AxiomViolation("antisymmetry", rep.antisymmetry_witness);
    if (!rep.cojacobi) throw AxiomViolation("co-Jacobi", rep.cojacobi_witness);
    if (!rep.cocycle) throw AxiomViolation("cocycle", rep.cocycle_witness.first);
  }
  return delta;
}

/// (phi (x) phi) o delta = delta' o phi on every basis element. Throws
/// NotLieMorphism when phi does not preserve brackets.
template <class S>
bool is_bialgebra_morphism(const StructureConstants& sc, const AlgebraMap<S>& phi, const Cobracket<S>& delta,
                           const Cobracket<S>& delta_prime) {
  if (phi.bracket_violation(sc)) throw NotLieMorphism("map does not preserve brackets");
  for (int i = 0; i < sc.dimension(); ++i) {
    if (!(apply_map2(phi, delta.values[i]) == delta_prime.apply(phi.column(i)))) return false;
  }
  return true;
}

/// True iff (phi (x) phi)(r1) - r2 is a scalar multiple of Omega. Also
/// evaluates the direct morphism check between the coboundary structures and
/// throws IdentityViolation if the two verdicts differ.
template <class S>
bool surjective_morphism_criterion(const ChevalleyAlgebra& g, const AlgebraMap<S>& phi, const Tensor2<S>& r1,
                                   const Tensor2<S>& r2) {
  if (rank(phi.matrix()) != static_cast<std::size_t>(g.dimension())) throw InvalidArgument("map is not surjective");
  const Tensor2<S> diff = apply_map2(phi, r1) - r2;
  const bool in_line = diff.is_zero() || proportionality(diff, lift_tensor<S>(g.omega())).has_value();
  const auto& sc = g.structure();
  const bool direct = is_bialgebra_morphism(sc, phi, coboundary(sc, r1), coboundary(sc, r2));
  if (in_line != direct) throw IdentityViolation("tensor criterion and direct morphism check disagree");
  return in_line;
}

/// True iff (phi (x) phi)(r) = r; checked against the direct automorphism
/// test of the coboundary structure (IdentityViolation on disagreement).
template <class S>
bool is_bialgebra_automorphism(const ChevalleyAlgebra& g, const AlgebraMap<S>& phi, const Tensor2<S>& r) {
  const auto& sc = g.structure();
  if (!phi.is_automorphism(sc)) throw NotLieMorphism("map is not a Lie algebra automorphism");
  const bool fixes = apply_map2(phi, r) == r;
  const auto delta = coboundary(sc, r);
  if (fixes != is_bialgebra_morphism(sc, phi, delta, delta)) {
    throw IdentityViolation("fixed-tensor criterion and direct automorphism check disagree");
  }
  return fixes;
}

/// Whether phi is a morphism from the coboundary structure of alpha r to that
/// of beta r.
template <class S>
bool scalar_multiple_obstruction(const ChevalleyAlgebra& g, const Tensor2<S>& r, const S& alpha, const S& beta,
                                 const AlgebraMap<S>& phi) {
  if (is_zero(alpha) || is_zero(beta)) throw InvalidArgument("scalars must be nonzero");
  const auto& sc = g.structure();
  return is_bialgebra_morphism(sc, phi, coboundary(sc, Tensor2<S>(alpha * r)), coboundary(sc, Tensor2<S>(beta * r)));
}

}  // namespace bdforge
