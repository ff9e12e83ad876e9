#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdforge/twist.hpp"

using namespace bdforge;

namespace {

const DiagramAutomorphism kSwap({1, 0});
const AdmissibleTriple kA2Triple{{0}, {1}, {{0, 1}}};

AlgebraMap<QuadExt> chi_pi_hat(const ChevalleyAlgebra& g, const DiagramAutomorphism& pi) {
  return chevalley_automorphism(g).compose(lift_diagram_automorphism(g, pi)).lift<QuadExt>();
}

}  // namespace

TEST_CASE("A_Gamma^Q membership") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  for (const auto& t : enumerate_admissible_triples(g.root_system())) {
    CHECK(in_A_Gamma_Q(g, DiagramAutomorphism::identity(2), make_quadruple(g, t)));
  }
  CHECK(in_A_Gamma_Q(g, kSwap, make_quadruple(g, AdmissibleTriple::trivial())));
  CHECK_FALSE(in_A_Gamma_Q(g, kSwap, make_quadruple(g, kA2Triple)));
}

TEST_CASE("torus centralizer") {
  const ChevalleyAlgebra a1 = build_chevalley('A', 1);
  const RMatrix dj = build_dj_rmatrix(a1);
  CHECK(in_centralizer_CBD(a1, TorusElement<Rational>::identity(1), dj.r));
  for (long q : {-2L, 3L, 5L}) CHECK(in_centralizer_CBD(a1, TorusElement<Rational>({Rational(q)}), dj.r));

  const ChevalleyAlgebra a2 = build_chevalley('A', 2);
  const RMatrix bd = build_bd_rmatrix(a2, make_quadruple(a2, kA2Triple));
  CHECK_FALSE(in_centralizer_CBD(a2, TorusElement<Rational>({Rational(2), Rational(1)}), bd.r));
  CHECK(in_centralizer_CBD(a2, TorusElement<Rational>({Rational(-3, 2), Rational(-3, 2)}), bd.r));
}

TEST_CASE("automorphisms factor as diagram times torus") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const AdmissibleQuadruple dj = make_quadruple(g, AdmissibleTriple::trivial());
  const RMatrix rdj = build_bd_rmatrix(g, dj);
  const auto id = DiagramAutomorphism::identity(2);
  CHECK(taut_membership(g, id, TorusElement<Rational>::identity(2), dj, rdj.r));
  CHECK(taut_membership(g, kSwap, TorusElement<Rational>({Rational(3), Rational(-1, 2)}), dj, rdj.r));

  const AdmissibleQuadruple q = make_quadruple(g, kA2Triple);
  const RMatrix r = build_bd_rmatrix(g, q);
  CHECK_FALSE(taut_membership(g, kSwap, TorusElement<Rational>::identity(2), q, r.r));
  CHECK_FALSE(taut_membership(g, id, TorusElement<Rational>({Rational(2), Rational(1)}), q, r.r));
  CHECK(taut_membership(g, id, TorusElement<Rational>({Rational(2), Rational(2)}), q, r.r));
}

TEST_CASE("find_pi") {
  const ChevalleyAlgebra a1 = build_chevalley('A', 1);
  const auto q1 = make_quadruple(a1, AdmissibleTriple::trivial());
  const auto pi1 = find_pi(a1, q1, build_bd_rmatrix(a1, q1).r);
  REQUIRE(pi1.has_value());
  CHECK(pi1->is_identity());

  const ChevalleyAlgebra a2 = build_chevalley('A', 2);
  const auto q2 = make_quadruple(a2, kA2Triple);
  const auto r2 = build_bd_rmatrix(a2, q2);
  const auto pi2 = find_pi(a2, q2, r2.r);
  // exhaustive search over Aut(Gamma)
  std::optional<DiagramAutomorphism> expect;
  for (const auto& p : diagram_automorphisms(a2.root_system())) {
    if (!expect && satisfies_pi_condition(a2, q2, p)) expect = p;
  }
  CHECK(pi2 == expect);
  REQUIRE(pi2.has_value());
  CHECK(*pi2 == kSwap);
  const auto cp = chi_pi_hat(a2, *pi2).lift<QuadExt>();
  CHECK(apply_map2(chevalley_automorphism(a2).compose(lift_diagram_automorphism(a2, *pi2)), r2.r) == flip(r2.r));

  // B2 with a nonzero antisymmetric Cartan offset: id fails and Aut(Gamma) is trivial
  const ChevalleyAlgebra b2 = build_chevalley('B', 2);
  const CartanSolution sol = solve_cartan_part(b2, AdmissibleTriple::trivial());
  REQUIRE(sol.kernel.size() == 1);
  const auto qb = make_quadruple(b2, AdmissibleTriple::trivial(), Tensor2<Rational>(sol.particular + sol.kernel[0]));
  CHECK_FALSE(find_pi(b2, qb, build_bd_rmatrix(b2, qb).r).has_value());
}

TEST_CASE("twist cocycles") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const auto dj = make_quadruple(g, AdmissibleTriple::trivial());
  const auto rdj = build_bd_rmatrix(g, dj);
  const GaloisCocycle u = build_twist_cocycle(g, dj, DiagramAutomorphism::identity(2), 5, rdj.r);
  CHECK(u.u == chevalley_automorphism(g).lift<QuadExt>());
  CHECK(satisfies_cocycle_condition(u));

  const GaloisCocycle us = build_twist_cocycle(g, dj, kSwap, 5, rdj.r);
  CHECK(us.u == chi_pi_hat(g, kSwap));
  CHECK(us.u.compose(us.u).is_identity());

  const auto q = make_quadruple(g, kA2Triple);
  const auto r = build_bd_rmatrix(g, q);
  const GaloisCocycle uq = build_twist_cocycle(g, q, kSwap, 5, r.r);
  const Tensor2<QuadExt> rl = lift_tensor<QuadExt>(r.r);
  CHECK(apply_map2(uq.u, rl) == flip(rl));
  CHECK_THROWS_AS(build_twist_cocycle(g, q, DiagramAutomorphism::identity(2), 5, r.r), PiConditionViolated);
  CHECK_THROWS_AS(build_twist_cocycle(g, dj, kSwap, 4, rdj.r), InvalidArgument);

  GaloisCocycle broken{5, torus_adjoint(g, TorusElement<QuadExt>({QuadExt::sqrt(5), QuadExt(1)}))};
  CHECK_FALSE(satisfies_cocycle_condition(broken));
  CHECK_THROWS(validate_cocycle(g.structure(), broken));
}

TEST_CASE("hat map") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const auto dj = make_quadruple(g, AdmissibleTriple::trivial());
  const RMatrix r = build_bd_rmatrix(g, dj);
  const GaloisCocycle base = build_twist_cocycle(g, dj, kSwap, 5, r.r);
  CHECK(hat_map(g, TwistedCocycleClass{base, r}, kSwap).is_identity());

  // t_{pi(i)} = conj(t_i)
  const QuadExt a(Rational(1), Rational(2), 5);
  const TorusElement<QuadExt> t({a, conj(a)});
  const AlgebraMap<QuadExt> ad = torus_adjoint(g, t);
  const GaloisCocycle u{5, ad.compose(chi_pi_hat(g, kSwap))};
  CHECK(satisfies_cocycle_condition(u));
  const AlgebraMap<QuadExt> hat = hat_map(g, TwistedCocycleClass{u, r}, kSwap);
  CHECK(hat == ad);
  CHECK(is_bialgebra_automorphism(g, hat, lift_tensor<QuadExt>(r.r)));

  CHECK_THROWS_AS(hat_map(g, TwistedCocycleClass{u, r, DescentCase::Case1}, kSwap), InvalidArgument);
}

TEST_CASE("equivalence of cocycles and of twisted cocycles") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const auto dj = make_quadruple(g, AdmissibleTriple::trivial());
  const RMatrix r = build_bd_rmatrix(g, dj);
  const QuadExt a(Rational(1), Rational(2), 5);
  const AlgebraMap<QuadExt> u = torus_adjoint(g, TorusElement<QuadExt>({a, conj(a)})).compose(chi_pi_hat(g, kSwap));
  const AlgebraMap<QuadExt> rho =
      torus_adjoint(g, TorusElement<QuadExt>({QuadExt(Rational(3), Rational(-1), 5), QuadExt(Rational(1, 2))}));
  const AlgebraMap<QuadExt> w = rho.inverse()->compose(u).compose(rho.conjugate());
  const AlgebraMap<QuadExt> hu = hat_map(g, TwistedCocycleClass{{5, u}, r}, kSwap);
  const AlgebraMap<QuadExt> hw = hat_map(g, TwistedCocycleClass{{5, w}, r}, kSwap);
  CHECK(cocycles_equivalent_via(u, w, rho));
  CHECK(twisted_equivalent_via(g, hu, hw, rho, kSwap));
  const AlgebraMap<QuadExt> other = AlgebraMap<QuadExt>::identity(g.dimension());
  CHECK_FALSE(cocycles_equivalent_via(u, w, other));
  CHECK_FALSE(twisted_equivalent_via(g, hu, hw, other, kSwap));
}
