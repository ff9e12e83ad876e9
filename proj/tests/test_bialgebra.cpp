#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdforge/bd.hpp"
#include "bdforge/bialgebra.hpp"

using namespace bdforge;

TEST_CASE("the Casimir has zero cobracket") {
  for (const auto& [type, rank] : {std::pair{'A', 1}, {'A', 3}, {'B', 2}, {'G', 2}}) {
    const ChevalleyAlgebra g = build_chevalley(type, rank);
    CHECK(coboundary(g.structure(), g.omega()).is_zero());
  }
}

TEST_CASE("standard cobracket on sl2") {
  const ChevalleyAlgebra g = build_chevalley('A', 1);
  const int h = 0, e = g.pos_index(0), f = g.neg_index(0);
  const Cobracket<Rational> delta = cobracket_from_r(g.structure(), build_dj_rmatrix(g).r);
  Tensor2<Rational> de, df;
  de.add({e, h}, Rational(1, 8));
  de.add({h, e}, Rational(-1, 8));
  df.add({f, h}, Rational(1, 8));
  df.add({h, f}, Rational(-1, 8));
  CHECK(delta.values[h].is_zero());
  CHECK(delta.values[e] == de);
  CHECK(delta.values[f] == df);
  CHECK(delta.apply(g.basis(e) + g.basis(f)) == de + df);
}

TEST_CASE("axioms hold for every BD cobracket") {
  for (const auto& [type, rank] : {std::pair{'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    const ChevalleyAlgebra g = build_chevalley(type, rank);
    for (const auto& t : enumerate_admissible_triples(g.root_system())) {
      const RMatrix r = build_bd_rmatrix(g, make_quadruple(g, t));
      const AxiomReport rep = check_bialgebra_axioms(g.structure(), coboundary(g.structure(), r.r));
      CHECK(rep.antisymmetric);
      CHECK(rep.cojacobi);
      CHECK(rep.cocycle);
    }
  }
}

TEST_CASE("axiom failures carry witnesses") {
  const ChevalleyAlgebra g = build_chevalley('A', 1);
  const int h = 0, e = g.pos_index(0);
  // r = e (x) h: r + flip(r) is not invariant
  Tensor2<Rational> r;
  r.add({e, h}, Rational(1));
  const AxiomReport rep = check_bialgebra_axioms(g.structure(), coboundary(g.structure(), r));
  CHECK_FALSE(rep.antisymmetric);
  CHECK(rep.antisymmetry_witness >= 0);
  CHECK(rep.cocycle);
  CHECK_THROWS_AS(cobracket_from_r(g.structure(), r), AxiomViolation);
  CHECK_NOTHROW(cobracket_from_r(g.structure(), r, false));

  // a cobracket that is not a cocycle
  Cobracket<Rational> bad;
  bad.values.assign(3, Tensor2<Rational>());
  bad.values[h].add({e, h}, Rational(1));
  bad.values[h].add({h, e}, Rational(-1));
  const AxiomReport rb = check_bialgebra_axioms(g.structure(), bad);
  CHECK(rb.antisymmetric);
  CHECK_FALSE(rb.cocycle);
  CHECK(rb.cocycle_witness.first >= 0);
}

TEST_CASE("morphisms of coboundary bialgebras") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const auto& sc = g.structure();
  const auto id = AlgebraMap<Rational>::identity(g.dimension());
  const RMatrix dj = build_dj_rmatrix(g);
  const auto delta = coboundary(sc, dj.r);
  CHECK(is_bialgebra_morphism(sc, id, delta, delta));

  const AdmissibleTriple t{{0}, {1}, {{0, 1}}};
  const RMatrix bd = build_bd_rmatrix(g, make_quadruple(g, t));
  // alpha1(t) = 2, alpha2(t) = 1 scales the cross term
  const auto ad = torus_adjoint(g, TorusElement<Rational>({Rational(2), Rational(1)}));
  CHECK(apply_map2(ad, bd.r) != bd.r);
  CHECK_FALSE(is_bialgebra_morphism(sc, ad, coboundary(sc, bd.r), coboundary(sc, bd.r)));
  CHECK_THROWS_AS(is_bialgebra_morphism(sc, id.scaled(Rational(2)), delta, delta),
                  NotLieMorphism);
}

TEST_CASE("surjective morphism criterion") {
  const ChevalleyAlgebra g = build_chevalley('A', 1);
  const auto id = AlgebraMap<Rational>::identity(3);
  const RMatrix dj = build_dj_rmatrix(g);
  CHECK(surjective_morphism_criterion(g, id, dj.r, dj.r));
  CHECK(surjective_morphism_criterion(g, id, dj.r, Tensor2<Rational>(dj.r + g.omega())));
  Tensor2<Rational> ef;
  ef.add({g.pos_index(0), g.neg_index(0)}, Rational(1));
  CHECK_FALSE(surjective_morphism_criterion(g, id, dj.r, Tensor2<Rational>(dj.r + ef)));
  CHECK_THROWS_AS(surjective_morphism_criterion(g, AlgebraMap<Rational>(Matrix<Rational>(3, 3)), dj.r, dj.r),
                  InvalidArgument);
}

TEST_CASE("automorphisms of the standard structure") {
  const ChevalleyAlgebra a1 = build_chevalley('A', 1);
  const RMatrix r1 = build_dj_rmatrix(a1);
  CHECK(is_bialgebra_automorphism(a1, AlgebraMap<Rational>::identity(3), r1.r));
  for (long q : {2L, -3L, 7L}) {
    CHECK(is_bialgebra_automorphism(a1, torus_adjoint(a1, TorusElement<Rational>({Rational(q)})), r1.r));
  }
  const ChevalleyAlgebra a2 = build_chevalley('A', 2);
  CHECK_FALSE(is_bialgebra_automorphism(a2, chevalley_automorphism(a2), build_dj_rmatrix(a2).r));
}

TEST_CASE("scalar multiples") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const RMatrix dj = build_dj_rmatrix(g);
  const auto id = AlgebraMap<Rational>::identity(g.dimension());
  const auto chi = chevalley_automorphism(g);
  CHECK(scalar_multiple_obstruction(g, dj.r, Rational(3), Rational(3), id));
  CHECK(scalar_multiple_obstruction(g, dj.r, Rational(1), Rational(-1), chi));
  const auto swap = lift_diagram_automorphism(g, DiagramAutomorphism({1, 0}));
  CHECK(scalar_multiple_obstruction(g, dj.r, Rational(1), Rational(-1), chi.compose(swap)));
  for (const auto& phi : {id, chi, swap, chi.compose(swap)}) {
    CHECK_FALSE(scalar_multiple_obstruction(g, dj.r, Rational(1), Rational(2), phi));
  }
  CHECK_THROWS_AS(scalar_multiple_obstruction(g, dj.r, Rational(0), Rational(1), id), InvalidArgument);
}
