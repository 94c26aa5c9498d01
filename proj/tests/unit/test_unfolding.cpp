#include <doctest.h>

#include "chebfold/unfolding.hpp"

using namespace cf;

namespace {

// independent check: sum over block rows of w_i s_ij equals b_ab w_j, in floating point
bool numeric_conditions(const IntMat& S, const ZMat& B, const FoldingSpec& spec) {
  for (int a = 0; a < spec.folded_size(); ++a)
    for (int j = 0; j < spec.size(); ++j) {
      double s = 0;
      for (int i : spec.blocks[a]) s += spec.vw[i].to_double() * S(i, j).get_d();
      double e = B(a, spec.F[j]).to_double() * spec.vw[j].to_double();
      if (std::abs(s - e) > 1e-9) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("standard foldings satisfy the unfolding conditions initially") {
  for (auto [k, n] : std::vector<std::pair<std::string, int>>{
           {"H3", 0}, {"H4", 0}, {"I2", 2}, {"I2", 3}, {"I2", 4}, {"I2series", 4}, {"I2series", 5}, {"F4E6", 0}}) {
    auto spec = standard_folding(k, n);
    auto rep = check_conditions(spec.S, spec.B, spec.blocks, spec.vw);
    CHECK_MESSAGE(rep.pass, k << n);
    CHECK(numeric_conditions(spec.S, spec.B, spec));
  }
}

TEST_CASE("weights of the example foldings") {
  auto i5 = standard_folding("I2series", 4);
  AlgReal phi = AlgReal::gen(5), one(5, 1L);
  CHECK(i5.vw == std::vector<AlgReal>{one, phi, phi, one});
  auto g2 = standard_folding("I2series", 5);
  AlgReal r3 = AlgReal::gen(6);
  CHECK(g2.vw == std::vector<AlgReal>{AlgReal(6, 1L), r3, AlgReal(6, 2L), r3, AlgReal(6, 1L)});
  auto h3 = standard_folding("H3", 0);
  CHECK(h3.size() == 6);
  CHECK(h3.folded_size() == 3);
  auto h4 = standard_folding("H4", 0);
  CHECK(h4.size() == 8);
}

TEST_CASE("unfolding survives mutation words, checked numerically along a walk") {
  auto spec = standard_folding("H3", 0);
  IntMat S = spec.S;
  ZMat B = spec.B;
  std::vector<int> word{0, 1, 2, 1, 0, 2, 2, 1, 0, 1};
  for (int k : word) {
    S = composite_mutate(S, spec.blocks[k]);
    B = mutate(B, k);
    CHECK(numeric_conditions(S, B, spec));
    CHECK(check_conditions(S, B, spec.blocks, spec.vw).pass);
  }
}

TEST_CASE("depth-bounded unfolding check on every example") {
  for (auto [k, n] : std::vector<std::pair<std::string, int>>{
           {"H3", 0}, {"I2", 2}, {"I2series", 4}, {"I2series", 5}, {"F4E6", 0}}) {
    auto rep = check_weighted_unfolding(standard_folding(k, n), 4, 20, 12, 3);
    CHECK_MESSAGE(rep.pass, k << n << " " << rep.error);
  }
}

TEST_CASE("a wrong weight is detected") {
  auto spec = standard_folding("I2series", 4);
  spec.vw[1] = AlgReal(5, 1L);
  CHECK_FALSE(check_conditions(spec.S, spec.B, spec.blocks, spec.vw).pass);
}

TEST_CASE("block order with the odd vertices first fails for G2") {
  auto spec = standard_folding("I2series", 5);
  std::swap(spec.blocks[0], spec.blocks[1]);
  CHECK_FALSE(check_conditions(spec.S, spec.B, spec.blocks, spec.vw).pass);
}

TEST_CASE("lifting entries and building the unfolded matrix") {
  int n = 3;
  AlgReal x = AlgReal::gen(7);
  auto l = lift_entry(x, n);
  REQUIRE(l);
  CHECK(*l == ChebElem::theta(n, 1));
  CHECK(lift_entry(-x, n) == -ChebElem::theta(n, 1));
  CHECK_FALSE(lift_entry(x * x, n));
  auto spec = standard_folding("I2", n);
  CHECK(build_unfolded_matrix(spec.B, n) == spec.S);
}

TEST_CASE("d_F of the identity is the identity") {
  for (auto k : {"H3", "H4"}) {
    auto spec = standard_folding(k, 0);
    IntMat I(spec.size(), spec.size(), Int(0));
    for (int i = 0; i < spec.size(); ++i) I(i, i) = 1;
    CHECK(matrix_dF(spec, I) == identity(spec.folded_size(), spec.zero(), spec.one()));
  }
  auto spec = standard_folding("H3", 0);
  CHECK(spec.lift({}).empty());
  CHECK(spec.lift({1}) == spec.blocks[1]);
}

TEST_CASE("unknown folding kinds are rejected") {
  CHECK_THROWS_AS(standard_folding("B7", 0), std::invalid_argument);
  CHECK_THROWS_AS(standard_folding("I2", 1), std::invalid_argument);
}
