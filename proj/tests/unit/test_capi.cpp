#include <doctest.h>

#include <cstring>
#include <string>

#include "chebfold.h"
#include <json.hpp>

namespace {

std::string take(char* s) {
  std::string r = s ? s : "";
  cf_string_free(s);
  return r;
}

}  // namespace

TEST_CASE("folding handles") {
  cf_folding* f = nullptr;
  REQUIRE(cf_folding_new("H3", 0, &f) == CF_OK);
  CHECK(cf_folding_size(f) == 6);
  CHECK(cf_folding_folded_size(f) == 3);
  char* out = nullptr;
  REQUIRE(cf_folding_json(f, &out) == CF_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["name"] == "H3");
  int passed = 0;
  REQUIRE(cf_fold_report(f, &passed, &out) == CF_OK);
  take(out);
  CHECK(passed == 1);
  cf_folding_free(f);
}

TEST_CASE("error codes and messages") {
  cf_folding* f = nullptr;
  CHECK(cf_folding_new("B7", 0, &f) == CF_ERR_ARGUMENT);
  CHECK(std::strlen(cf_last_error()) > 0);
  CHECK(f == nullptr);
  CHECK(cf_folding_new(nullptr, 0, &f) == CF_ERR_ARGUMENT);
  cf_matrix* m = nullptr;
  CHECK(cf_matrix_from_json("{not json", &m) == CF_ERR_PARSE);
  REQUIRE(cf_matrix_from_json(R"({"ring":"int","entries":[[0,1],[-1,0]]})", &m) == CF_OK);
  cf_matrix* m2 = nullptr;
  CHECK(cf_matrix_mutate(m, 5, &m2) == CF_ERR_MUTATION);
  REQUIRE(cf_matrix_mutate(m, 1, &m2) == CF_OK);
  char* out = nullptr;
  REQUIRE(cf_matrix_to_json(m2, &out) == CF_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["entries"][0][1] == -1);
  cf_matrix_free(m);
  cf_matrix_free(m2);
  CHECK(cf_ring_table(0, &out) == CF_ERR_ARGUMENT);
}

TEST_CASE("tilting and seeds through the C interface") {
  cf_folding* f = nullptr;
  REQUIRE(cf_folding_new("I2", 3, &f) == CF_OK);
  char* out = nullptr;
  int passed = 0;
  REQUIRE(cf_tilting(f, "json", &passed, &out) == CF_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["count"] == 9);
  CHECK(passed == 1);
  REQUIRE(cf_seed_count(f, 1000, &out) == CF_OK);
  j = nlohmann::json::parse(take(out));
  CHECK(j["unlabelled"] == 9);
  int word[] = {0, 1, 0};
  REQUIRE(cf_tropical_csv(f, word, 3, &out) == CF_OK);
  CHECK(take(out).find("step,word") == 0);
  int bad[] = {2};
  CHECK(cf_tropical_csv(f, bad, 1, &out) == CF_ERR_ARGUMENT);
  cf_folding_free(f);
}
