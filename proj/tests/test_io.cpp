#include <doctest.h>

#include "alcove/json_io.hpp"

using namespace alcove;

TEST_CASE("datum JSON round trip") {
  for (const char* label : {"A2", "C3", "G2"}) {
    const BasedRootDatum d = build_datum(CartanType::parse(label), Isogeny::simply_connected);
    const Json j = to_json(d);
    const BasedRootDatum back = datum_from_json(Json::parse(j.dump()));
    CHECK(back.rank == d.rank);
    CHECK(back.roots == d.roots);
    CHECK(back.coroots == d.coroots);
    CHECK(back.simple == d.simple);
    CHECK(back.bijection == d.bijection);
    CHECK(back.reduced == d.reduced);
  }
}

TEST_CASE("affine map JSON round trip") {
  AffineMap m = identity_map(2);
  m.translation = RationalVector{Rational(1, 3), Rational(-2)};
  m.linear.word = {0, 1};
  const AffineMap back = affine_map_from_json(Json::parse(to_json(m).dump()));
  CHECK(back == m);
  CHECK(back.linear.word == m.linear.word);
  CHECK(to_json(m)["translation"][0] == "1/3");
}

TEST_CASE("vectors and matrices serialize as decimal strings") {
  const IntMatrix a = IntMatrix::from_rows({{1, -2}, {3, 4}});
  const Json j = to_json(a);
  CHECK(j.dump() == R"([["1","-2"],["3","4"]])");
  CHECK(int_matrix_from_json(j) == a);
  CHECK(int_vector_from_json(Json::parse(R"([1, "-7"])")) == IntVector{1, -7});
  CHECK(rational_vector_from_json(Json::parse(R"(["2/4", 3])")) == RationalVector{Rational(1, 2), 3});
}

TEST_CASE("malformed JSON input is rejected") {
  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"rank": 1})")), Error);
  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"rank": -1, "roots": [], "coroots": [], "simple": [],
                                                  "bijection": [], "reduced": true})")),
                  Error);
  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"rank": 1, "roots": [[2]], "coroots": [[1]], "simple": [4],
                                                  "bijection": [0], "reduced": true})")),
                  Error);
  CHECK_THROWS_AS(int_matrix_from_json(Json::parse(R"([[1, 2], [3]])")), Error);
  CHECK_THROWS_AS(int_vector_from_json(Json::parse(R"(["x"])")), Error);
  CHECK_THROWS_AS(affine_map_from_json(Json::parse(R"({"matrix": [[1]], "translation": ["1", "2"]})")), Error);
}

TEST_CASE("Omega JSON carries the multiplication table") {
  const Setting s(CartanType::parse("A2"), Isogeny::simply_connected);
  const Json j = to_json(s.omega);
  CHECK(j["order"] == 3);
  CHECK(j["factors"] == Json::array({3}));
  CHECK(j["elements"].size() == 3);
  CHECK(j["table"].size() == 3);
  for (const auto& e : j["elements"]) CHECK(affine_map_from_json(e).translation.size() == 2);
}
