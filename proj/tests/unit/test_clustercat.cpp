#include <doctest.h>

#include <random>

#include "chebfold/clustercat.hpp"

using namespace cf;

TEST_CASE("cluster category sizes") {
  struct Case {
    std::string kind;
    int n, objects, gamma;
  };
  for (const auto& c : std::vector<Case>{{"H3", 0, 36, 18}, {"H4", 0, 128, 64}, {"I2", 3, 27, 9}}) {
    ClusterCategory cc(standard_folding(c.kind, c.n));
    CHECK(cc.size() == c.objects);
    CHECK(static_cast<int>(cc.generators().size()) == c.gamma);
  }
}

TEST_CASE("orbit Hom agrees with the closed form and vanishing is symmetric") {
  for (auto [k, n] : std::vector<std::pair<std::string, int>>{{"H3", 0}, {"I2", 3}}) {
    ClusterCategory cc(standard_folding(k, n));
    for (int x = 0; x < cc.size(); ++x) {
      CHECK(cc.ext(x, x) == 0);
      for (int y = 0; y < cc.size(); ++y) {
        CHECK(cc.ext(x, y) == cc.ext_closed_form(x, y));
        CHECK((cc.ext(x, y) == 0) == (cc.ext(y, x) == 0));
      }
    }
  }
}

TEST_CASE("Hom_C contains module Hom") {
  ClusterCategory cc(standard_folding("I2", 3));
  const auto& ar = cc.ar();
  for (int x = 0; x < ar.size(); ++x)
    for (int y = 0; y < ar.size(); ++y) CHECK(cc.hom(x, y) >= ar.hom_dim(x, y));
}

TEST_CASE("rigidity") {
  ClusterCategory cc(standard_folding("H3", 0));
  auto T = initial_tilting(cc);
  CHECK(cc.is_Rplus_rigid(T.summands));
  CHECK(cc.is_Rplus_rigid({T.summands[0]}));
  // some pair of generators is not compatible
  bool found = false;
  for (int a : cc.generators())
    for (int b : cc.generators())
      if (a != b && !cc.is_Rplus_rigid({a, b})) found = true;
  CHECK(found);
}

TEST_CASE("tilting counts and complements") {
  struct Case {
    std::string kind;
    int n;
    size_t count;
  };
  for (const auto& c : std::vector<Case>{{"I2", 2, 7}, {"I2", 3, 9}, {"H3", 0, 32}}) {
    ClusterCategory cc(standard_folding(c.kind, c.n));
    auto en = enumerate_Rplus_tilting(cc);
    CHECK(en.objects.size() == c.count);
    CHECK(en.all_length_ok);
    CHECK(en.hats_ok);
    CHECK(en.complements_ok);
    CHECK(en.partition_ok);
    auto walk = exchange_walk(cc, en);
    CHECK(walk.pass());
  }
}

TEST_CASE("mutating twice at one summand is the identity") {
  ClusterCategory cc(standard_folding("H3", 0));
  auto T = initial_tilting(cc);
  for (int k = 0; k < 3; ++k) {
    auto T1 = mutate_tilting(cc, T, k);
    CHECK(T1.summands != T.summands);
    CHECK(mutate_tilting(cc, T1, k).summands == T.summands);
  }
}

TEST_CASE("I2(7): a single column generator has the two neighbouring columns as complements") {
  ClusterCategory cc(standard_folding("I2", 3));
  for (int g : cc.generators()) {
    auto c = complements(cc, {g});
    CHECK(c.size() == 2);
  }
}

TEST_CASE("g-vectors") {
  ClusterCategory cc(standard_folding("H3", 0));
  const auto& ar = cc.ar();
  int n = ar.q.n;
  for (int i = 0; i < n; ++i) {
    auto g = cc.g_vector(ar.proj[i]);
    auto sp = cc.g_vector(ar.size() + i);
    for (int j = 0; j < n; ++j) {
      CHECK(g[j] == (i == j ? 1 : 0));
      CHECK(sp[j] == (i == j ? -1 : 0));
    }
  }
  // <g(M), dim N> = hom(M,N) - ext(M,N) for modules
  for (int x = 0; x < ar.size(); ++x) {
    auto g = cc.g_vector(x);
    for (int y = 0; y < ar.size(); ++y) {
      long pairing = 0;
      for (int i = 0; i < n; ++i) pairing += g[i].get_si() * ar.mods[y].dim[i];
      CHECK(pairing == ar.hom_dim(x, y) - ar.ext_dim(x, y));
    }
  }
}

TEST_CASE("initial tilting object gives the identity G-matrix") {
  ClusterCategory cc(standard_folding("H4", 0));
  auto T = initial_tilting(cc);
  auto spec = cc.spec();
  CHECK(tilting_G_folded(cc, T) == identity(4, spec.zero(), spec.one()));
  IntMat G = tilting_G_matrix(cc, T);
  CHECK(G == identity(8, Int(0), Int(1)));
}
