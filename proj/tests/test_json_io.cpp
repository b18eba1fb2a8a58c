#include <doctest.h>

#include <json.hpp>

#include <string>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/decomp.hpp"
#include "burau4/json_io.hpp"
#include "burau4/laurent.hpp"
#include "burau4/regularity.hpp"
#include "burau4/templieb.hpp"

using namespace burau4;
using braid::parse_bv;
using laurent::LaurentPoly;
using nlohmann::json;

TEST_CASE("polynomial round trip") {
  const LaurentPoly p = LaurentPoly::parse("-t^-3+2-5*t^2");
  const std::string text = json_io::to_json(p);
  CHECK(text == "[[-3,-1],[0,2],[2,-5]]");
  CHECK(json_io::poly_from_json(text) == p);
  CHECK(json_io::to_json(LaurentPoly()) == "[]");
  CHECK(json_io::poly_from_json("[]").is_zero());
}

TEST_CASE("polynomial JSON carries wide coefficients as strings") {
  // 2^80 does not fit 64 bits and must round trip through decimal text.
  LaurentPoly p = LaurentPoly::one();
  for (int i = 0; i < 80; ++i) p *= LaurentPoly::constant(2);
  p *= LaurentPoly::t_power(3);
  p += LaurentPoly::one();
  const std::string text = json_io::to_json(p);
  const json j = json::parse(text);
  REQUIRE(j.size() == 2);
  CHECK(j[0][1] == 1);
  CHECK(j[1][0] == 3);
  CHECK(j[1][1].is_string());
  CHECK(j[1][1] == "1208925819614629174706176");
  CHECK(json_io::poly_from_json(text) == p);
}

TEST_CASE("polynomial JSON rejects malformed shapes") {
  CHECK_THROWS_AS((void)json_io::poly_from_json("{}"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)json_io::poly_from_json("[[1]]"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)json_io::poly_from_json("[[1,2,3]]"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)json_io::poly_from_json("[[\"x\",2]]"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)json_io::poly_from_json("[[1,2.5]]"),
                  std::invalid_argument);
}

TEST_CASE("matrix rendering is row major") {
  const auto m = burau::generator_matrix(1, +1);
  const json j = json::parse(json_io::to_json(m));
  REQUIRE(j.size() == 3);
  REQUIRE(j[0].size() == 3);
  CHECK(j[0][0] == json::parse("[[-1,-1]]"));  // -t^-1
  CHECK(j[0][1] == json::parse("[]"));
  CHECK(j[1][0] == json::parse("[[-1,1]]"));  // t^-1
  CHECK(j[1][1] == json::parse("[[0,1]]"));
  CHECK(j[2][2] == json::parse("[[0,1]]"));
}

TEST_CASE("algebra elements list pairings with coefficients") {
  const auto e = templieb::theta(braid::parse_braid("s1", 4), 4);
  const json j = json::parse(json_io::to_json(e));
  CHECK(j.at("n") == 4);
  REQUIRE(j.at("terms").size() == 2);
  bool saw_identity = false, saw_u1 = false;
  for (const auto& term : j.at("terms")) {
    const auto pairing = term.at("pairing");
    REQUIRE(pairing.size() == 8);
    if (pairing == json::parse("[8,7,6,5,4,3,2,1]")) {
      saw_identity = true;
      CHECK(term.at("coeff") == json::parse("[[1,1]]"));  // t
    }
    if (pairing == json::parse("[2,1,6,5,4,3,8,7]")) {
      saw_u1 = true;
      CHECK(term.at("coeff") == json::parse("[[-1,1]]"));  // t^-1
    }
  }
  CHECK(saw_identity);
  CHECK(saw_u1);
}

TEST_CASE("decomposition rendering uses canonical polynomial text") {
  auto res = decomp::extract_pqr(decomp::Word(parse_bv("B A b")), 2);
  REQUIRE(res.ok());
  auto d = *res.decomposition;
  REQUIRE(decomp::validate(d, 3) == std::nullopt);
  const json j = json::parse(json_io::to_json(d));
  CHECK(j.at("word") == "BAb");
  CHECK(j.at("n") == 2);
  CHECK(j.at("P") == "t^-2");
  CHECK(j.at("Q") == "0");
  CHECK(j.at("R") == "-1+t-t^3+t^4");
  CHECK(j.at("validated_depth") == 3);
}

TEST_CASE("instance rendering marks absent degrees as null") {
  const auto id = regularity::check_instance(braid::BVWord{}, 0, 0);
  const json j = json::parse(json_io::to_json(id));
  CHECK(j.at("word") == "");
  CHECK(j.at("rho11_degmin") == 0);
  CHECK(j.at("rho31_degmin").is_null());
  CHECK(j.at("diff").is_null());
  CHECK(j.at("regular") == false);
  CHECK(j.at("pure") == true);

  const auto e1 = regularity::check_instance(parse_bv("B A b"), 5, 0);
  const json j1 = json::parse(json_io::to_json(e1));
  CHECK(j1.at("word") == "BAb");
  CHECK(j1.at("m") == 5);
  CHECK(j1.at("rho11_degmin") == -6);
  CHECK(j1.at("rho31_degmin") == -5);
  CHECK(j1.at("diff") == -1);
  CHECK(j1.at("regular") == true);
}

TEST_CASE("scan rendering embeds the grid and threshold") {
  const auto res = regularity::scan_thresholds(parse_bv("B A b"), 0, 4, 0, 1);
  const json j = json::parse(json_io::to_json(res));
  CHECK(j.at("m_min") == 0);
  CHECK(j.at("m_max") == 4);
  CHECK(j.at("l_min") == 0);
  CHECK(j.at("l_max") == 1);
  REQUIRE(j.at("grid").size() == 10);
  CHECK(j.at("grid")[0].at("m") == 0);
  CHECK(j.at("grid")[0].at("l") == 0);
  CHECK(j.at("grid")[1].at("l") == 1);
  if (res.threshold) {
    CHECK(j.at("threshold")[0] == res.threshold->first);
    CHECK(j.at("threshold")[1] == res.threshold->second);
  } else {
    CHECK(j.at("threshold").is_null());
  }
}
