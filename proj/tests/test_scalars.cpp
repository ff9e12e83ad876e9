#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdforge/errors.hpp"
#include "bdforge/scalars.hpp"

using namespace bdforge;

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK_THROWS(Rational(0).inverse());
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1 /2"), ParseError);
}

TEST_CASE("quadratic conjugation") {
  const QuadExt three(Rational(3));
  CHECK(quad_conjugate(QuadExt(Rational(3), Rational(0), 5)) == QuadExt(Rational(3), Rational(0), 5));
  CHECK(quad_conjugate(three) == three);
  CHECK(quad_conjugate(QuadExt::sqrt(5)) == -QuadExt::sqrt(5));
  const QuadExt x(Rational(2), Rational(3), 5);
  CHECK(x * quad_conjugate(x) == QuadExt(Rational(-41)));
  CHECK(x.norm() == Rational(-41));
  // conj is a field automorphism
  const QuadExt y(Rational(-1, 2), Rational(5, 3), 5);
  CHECK(quad_conjugate(x * y) == quad_conjugate(x) * quad_conjugate(y));
  CHECK(quad_conjugate(x + y) == quad_conjugate(x) + quad_conjugate(y));
  CHECK(quad_conjugate(quad_conjugate(y)) == y);
}

TEST_CASE("quadratic field arithmetic") {
  const QuadExt s = QuadExt::sqrt(5);
  CHECK(s * s == QuadExt(Rational(5)));
  const QuadExt x(Rational(2), Rational(3), 5);
  CHECK(x * x.inverse() == QuadExt(Rational(1)));
  CHECK((x / x).is_rational());
  CHECK_THROWS(QuadExt().inverse());
  CHECK_THROWS_AS(QuadExt::sqrt(5) + QuadExt::sqrt(2), InvalidArgument);
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 4), InvalidArgument);
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 1), InvalidArgument);
  CHECK((QuadExt::sqrt(-1) * QuadExt::sqrt(-1)) == QuadExt(Rational(-1)));
}

TEST_CASE("quadratic strings round trip") {
  const QuadExt x(Rational(1, 2), Rational(-3, 4), 5);
  CHECK(x.to_string() == "1/2-3/4*sqrt(5)");
  CHECK(QuadExt::parse(x.to_string()) == x);
  CHECK(QuadExt::parse("sqrt(5)") == QuadExt::sqrt(5));
  CHECK(QuadExt::parse("-sqrt(5)") == -QuadExt::sqrt(5));
  CHECK(QuadExt::parse("1+sqrt(5)") == QuadExt(Rational(1), Rational(1), 5));
  CHECK(QuadExt::parse("3/2*sqrt(-1)") == QuadExt(Rational(0), Rational(3, 2), -1));
  CHECK_THROWS_AS(QuadExt::parse("1+*sqrt(5)"), ParseError);
  CHECK_THROWS_AS(QuadExt::parse("1+2sqrt(5)"), ParseError);
  CHECK(QuadExt::parse("-2/3") == QuadExt(Rational(-2, 3)));
  CHECK(QuadExt(Rational(0), Rational(2), 5).to_string() == "0+2*sqrt(5)");
  CHECK_THROWS_AS(QuadExt::parse("1+sqrt(x)"), ParseError);
  CHECK_THROWS_AS(QuadExt::parse("1+2*sqrt(4)"), InvalidArgument);
}

TEST_CASE("squares in Q") {
  CHECK(is_square_in_Q(Rational(4, 9)));
  CHECK_FALSE(is_square_in_Q(Rational(5)));
  CHECK(is_square_in_Q(Rational(0)));
  CHECK_FALSE(is_square_in_Q(Rational(-4)));
  CHECK_FALSE(is_square_in_Q(Rational(2, 9)));
  CHECK(is_squarefree(5));
  CHECK(is_squarefree(-1));
  CHECK_FALSE(is_squarefree(12));
  CHECK_FALSE(is_squarefree(0));
}
