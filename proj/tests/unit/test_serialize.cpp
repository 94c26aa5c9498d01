#include <doctest.h>

#include "chebfold/serialize.hpp"

using namespace cf;

TEST_CASE("scalars round trip") {
  AlgReal x = AlgReal::gen(7) * AlgReal::gen(7) - AlgReal(7, 3L);
  CHECK(algreal_from_json(to_json(x)) == x);
  ChebElem c(4, std::vector<long>{1, -2, 0, 5});
  CHECK(chebelem_from_json(to_json(c)) == c);
  Int big("123456789012345678901234567890");
  CHECK(int_from_json(to_json(big)) == big);
}

TEST_CASE("matrices round trip") {
  auto spec = standard_folding("H4", 0);
  auto a = matrix_from_json(to_json(spec.B));
  CHECK(std::get<ZMat>(a) == spec.B);
  auto b = matrix_from_json(to_json(spec.S));
  CHECK(std::get<IntMat>(b) == spec.S);
  auto t = json::parse(to_json(spec.B).dump());
  CHECK(std::get<ZMat>(matrix_from_json(t)) == spec.B);
}

TEST_CASE("malformed matrices") {
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"ring":"int","entries":[[0,1],[2]]})")), SerializeError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"ring":"real","entries":[]})")), SerializeError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"entries":[]})")), SerializeError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"ring":"int","entries":[["x"]]})")), SerializeError);
}

TEST_CASE("mutate_any keeps the ring") {
  auto a = matrix_from_json(json::parse(R"({"ring":"zhat","m":5,"entries":[[0,[0,1]],[[0,-1],0]]})"));
  auto m = mutate_any(a, 0);
  const auto& z = std::get<ZMat>(m);
  CHECK(z(0, 1) == -AlgReal::gen(5));
}

TEST_CASE("exports are deterministic") {
  auto fc = build_folded_category(standard_folding("I2", 3));
  CHECK(ar_dot(fc.ar, &fc) == ar_dot(fc.ar, &fc));
  auto csv = ar_csv(fc.ar, &fc);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 22);
  auto j = to_json(fc);
  CHECK(j["modules"].size() == 21);
  auto seeds = seed_csv(standard_folding("H3", 0), {0, 1});
  CHECK(std::count(seeds.begin(), seeds.end(), '\n') == 1 + 3 * 3);
}
