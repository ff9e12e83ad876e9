#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdforge/bd.hpp"
#include "bdforge/serialize.hpp"

using namespace bdforge;

TEST_CASE("triples use 1-based indices") {
  const AdmissibleTriple t{{0}, {1}, {{0, 1}}};
  const json j = to_json(t);
  CHECK(j.dump() == R"({"gamma1":[1],"gamma2":[2],"tau":{"1":"2"}})");
  CHECK(triple_from_json(j, 2) == t);
  CHECK(triple_from_json(parse_json_text(R"({"gamma1":["1"],"gamma2":[2],"tau":{"1":2}})"), 2) == t);
  CHECK(to_json(AdmissibleTriple::trivial()).dump() == R"({"gamma1":[],"gamma2":[],"tau":{}})");
}

TEST_CASE("triple parse errors") {
  CHECK_THROWS_AS(triple_from_json(parse_json_text("[1, 2]"), 2), ParseError);
  CHECK_THROWS_AS(triple_from_json(parse_json_text(R"({"gamma1":[1],"gamma2":[2]})"), 2), ParseError);
  CHECK_THROWS_AS(triple_from_json(parse_json_text(R"({"gamma1":["x"],"gamma2":[2],"tau":{}})"), 2), ParseError);
  CHECK_THROWS_AS(triple_from_json(parse_json_text(R"({"gamma1":[3],"gamma2":[2],"tau":{}})"), 2), InvalidArgument);
  CHECK_THROWS_AS(triple_from_json(parse_json_text(R"({"gamma1":[0],"gamma2":[2],"tau":{}})"), 2), InvalidArgument);
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
}

TEST_CASE("diagram automorphisms") {
  CHECK(to_json(DiagramAutomorphism({1, 0})).dump() == R"({"1":"2","2":"1"})");
}

TEST_CASE("tensors round trip") {
  const ChevalleyAlgebra g = build_chevalley('A', 1);
  const RMatrix dj = build_dj_rmatrix(g);
  const json j = to_json(dj.r);
  CHECK(j.dump() == R"([[0,0,"1/16"],[1,2,"1/4"]])");
  CHECK(tensor2_from_json<Rational>(j, 3) == dj.r);
  CHECK(tensor2_from_json<Rational>(parse_json_text(R"([[1, 2, 3]])"), 3).coeff({1, 2}) == Rational(3));

  Tensor2<QuadExt> q;
  q.add({0, 1}, QuadExt(Rational(1, 2), Rational(-3), 5));
  CHECK(tensor2_from_json<QuadExt>(to_json(q), 3) == q);
}

TEST_CASE("tensor parse errors") {
  CHECK_THROWS_AS(tensor2_from_json<Rational>(parse_json_text(R"({"a":1})"), 3), ParseError);
  CHECK_THROWS_AS(tensor2_from_json<Rational>(parse_json_text(R"([[0, 1]])"), 3), ParseError);
  CHECK_THROWS_AS(tensor2_from_json<Rational>(parse_json_text(R"([[0, 1, 1.5]])"), 3), ParseError);
  CHECK_THROWS_AS(tensor2_from_json<Rational>(parse_json_text(R"([[0, 1, "1/0"]])"), 3), std::exception);
  CHECK_THROWS_AS(tensor2_from_json<Rational>(parse_json_text(R"([[0, 3, "1"]])"), 3), InvalidArgument);
  CHECK_THROWS_AS(tensor2_from_json<Rational>(parse_json_text(R"([[-1, 0, "1"]])"), 3), InvalidArgument);
}

TEST_CASE("basis description") {
  const json j = basis_to_json(build_chevalley('A', 2));
  CHECK(j["dimension"] == 8);
  CHECK(j["cartan_matrix"].dump() == "[[2,-1],[-1,2]]");
  CHECK(j["basis"].size() == 8);
  CHECK(j["basis"][0]["label"] == "H1");
  CHECK(j["basis"][2]["weight"].dump() == "[1,0]");
}

TEST_CASE("maps are written by columns") {
  const ChevalleyAlgebra g = build_chevalley('A', 1);
  const json j = to_json(chevalley_automorphism(g));
  CHECK(j["0"].dump() == R"({"0":"-1"})");
  CHECK(j["1"].dump() == R"({"2":"-1"})");
}
