#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdforge/descent.hpp"

using namespace bdforge;

namespace {

Matrix<QuadExt> as_matrix(const MatrixRealization& m, const Element<QuadExt>& x) {
  const int n = m.n();
  Matrix<QuadExt> out(n, n);
  for (const auto& [i, c] : x) {
    const auto& b = m.matrix(i);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (!b(p, q).is_zero()) out(p, q) += c * QuadExt(b(p, q));
  }
  return out;
}

bool anti_hermitian(const Matrix<QuadExt>& x) {
  for (std::size_t p = 0; p < x.rows(); ++p)
    for (std::size_t q = 0; q < x.cols(); ++q)
      if (conj(x(q, p)) != -x(p, q)) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix realization of sl_n") {
  for (int n : {2, 3, 4}) {
    const MatrixRealization m(n);
    CHECK(m.algebra().dimension() == n * n - 1);
    CHECK_FALSE(m.commutator_violation().has_value());
    for (int i = 0; i < m.algebra().dimension(); ++i) {
      CHECK(m.coordinates(m.matrix(i)) == m.algebra().basis(i));
    }
  }
  const MatrixRealization m2(2);
  CHECK(m2.matrix(0)(0, 0) == Rational(1));
  CHECK(m2.matrix(0)(1, 1) == Rational(-1));
  CHECK(m2.matrix(m2.algebra().pos_index(0))(0, 1) == Rational(1));
  CHECK(m2.matrix(m2.algebra().neg_index(0))(1, 0) == Rational(1));
  CHECK_THROWS_AS(m2.coordinates(Matrix<Rational>::identity(2)), InvalidArgument);
  CHECK_THROWS_AS(MatrixRealization(5), UnsupportedRank);
  CHECK_THROWS_AS(MatrixRealization(1), UnsupportedRank);
}

TEST_CASE("transpose reverses the standard r-matrix") {
  for (int n : {2, 3, 4}) {
    const MatrixRealization m(n);
    const RMatrix dj = build_dj_rmatrix(m.algebra());
    CHECK(apply_map2(m.transpose_map(), dj.r) == flip(dj.r));
  }
}

TEST_CASE("trivial cocycle: the fixed points are the split form") {
  const ChevalleyAlgebra g = build_chevalley('A', 2);
  const GaloisCocycle id{5, AlgebraMap<QuadExt>::identity(g.dimension())};
  const DescendedForm form = fixed_points(g.structure(), id);
  REQUIRE(static_cast<int>(form.basis.size()) == g.dimension());
  for (const auto& x : form.basis) {
    for (const auto& [i, c] : x) CHECK(c.is_rational());
  }
  const RMatrix dj = build_dj_rmatrix(g);
  CHECK(pfields_decide(dj.r, id, AlphaClass::Rational) == DescentCase::Case1);
  CHECK(pfields_decide(dj.r, id, AlphaClass::SqrtD) == DescentCase::NoDescent);
  const Cobracket<Rational> delta = descend_cobracket(g.structure(), dj.r, id, form, AlphaClass::Rational);
  const AxiomReport rep = check_bialgebra_axioms(form.structure, delta);
  CHECK((rep.antisymmetric && rep.cojacobi && rep.cocycle));
  CHECK(reextend(form, delta).values == coboundary(g.structure(), lift_tensor<QuadExt>(dj.r)).values);
}

TEST_CASE("unitary descent") {
  for (int n : {2, 3}) {
    for (long d : {5L, -1L, 2L}) {
      CAPTURE(n);
      CAPTURE(d);
      const MatrixRealization m(n);
      const auto& sc = m.algebra().structure();
      const GaloisCocycle u = unitary_cocycle(m, d);
      CHECK(satisfies_cocycle_condition(u));
      const DescendedForm form = fixed_points(sc, u);
      REQUIRE(static_cast<int>(form.basis.size()) == n * n - 1);
      for (const auto& x : form.basis) CHECK(anti_hermitian(as_matrix(m, x)));

      const RMatrix dj = build_dj_rmatrix(m.algebra());
      CHECK(pfields_decide(dj.r, u, AlphaClass::SqrtD) == DescentCase::Case2);
      CHECK(pfields_decide(dj.r, u, AlphaClass::Rational) == DescentCase::NoDescent);
      CHECK_THROWS_AS(descend_cobracket(sc, dj.r, u, form, AlphaClass::Rational), InvalidArgument);

      const Cobracket<Rational> delta = descend_cobracket(sc, dj.r, u, form, AlphaClass::SqrtD);
      const AxiomReport rep = check_bialgebra_axioms(form.structure, delta);
      CHECK(rep.antisymmetric);
      CHECK(rep.cojacobi);
      CHECK(rep.cocycle);
      const Cobracket<QuadExt> expect =
          coboundary(sc, Tensor2<QuadExt>(QuadExt::sqrt(d) * lift_tensor<QuadExt>(dj.r)));
      CHECK(reextend(form, delta).values == expect.values);
    }
  }
}

TEST_CASE("form coordinates") {
  const MatrixRealization m(2);
  const GaloisCocycle u = unitary_cocycle(m, 5);
  const DescendedForm form = fixed_points(m.algebra().structure(), u);
  for (std::size_t k = 0; k < form.basis.size(); ++k) {
    const auto c = form_coordinates(form, form.basis[k]);
    REQUIRE(c.has_value());
    for (std::size_t j = 0; j < c->size(); ++j) CHECK((*c)[j] == Rational(j == k ? 1 : 0));
  }
  // e is not anti-Hermitian
  CHECK_FALSE(form_coordinates(form, Element<QuadExt>::basis(m.algebra().pos_index(0))).has_value());
}

TEST_CASE("bad cocycles are rejected") {
  const MatrixRealization m(2);
  CHECK_THROWS_AS(unitary_cocycle(m, 4), InvalidArgument);
  CHECK_THROWS_AS(unitary_cocycle(m, 1), InvalidArgument);
  const GaloisCocycle not_cocycle{5, AlgebraMap<QuadExt>::identity(3).scaled(QuadExt::sqrt(5))};
  CHECK_THROWS(fixed_points(m.algebra().structure(), not_cocycle));
}
