#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chebfold/rootsys.hpp"

using namespace cf;

TEST_CASE("root counts match rank times Coxeter number") {
  struct Case {
    std::string name;
    int p;
    size_t roots;
  };
  for (const auto& c : std::vector<Case>{{"A", 4, 20},
                                         {"A", 6, 42},
                                         {"D", 4, 24},
                                         {"D", 6, 60},
                                         {"E", 6, 72},
                                         {"E", 7, 126},
                                         {"E", 8, 240},
                                         {"H3", 0, 30},
                                         {"H4", 0, 120},
                                         {"I2", 5, 10},
                                         {"I2", 7, 14},
                                         {"I2", 9, 18}}) {
    auto rs = generate_roots(CoxeterType::from_name(c.name, c.p));
    CHECK_MESSAGE(rs.roots.size() == c.roots, c.name << c.p);
    CHECK(rs.positive.size() * 2 == c.roots);
  }
}

TEST_CASE("reflections are involutions and roots are sign-coherent") {
  auto t = CoxeterType::H(3);
  auto rs = generate_roots(t);
  for (const auto& v : rs.roots) {
    CHECK(sign_coherent(v));
    for (int i = 0; i < 3; ++i) CHECK(reflect(t, reflect(t, v, i), i) == v);
  }
}

TEST_CASE("H4 roots have unit length in the symmetric form") {
  auto t = CoxeterType::H(4);
  auto rs = generate_roots(t);
  double x = 2 * std::cos(std::numbers::pi / 5);
  for (const auto& v : rs.roots) {
    double q = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double c = i == j ? 2 : (t.labels[i][j] == 2 ? 0 : (t.labels[i][j] == 3 ? -1 : -x));
        q += v[i].to_double() * c * v[j].to_double();
      }
    CHECK(std::abs(q - 2) < 1e-9);
  }
}

TEST_CASE("membership") {
  auto rs = generate_roots(CoxeterType::I2(5));
  AlgReal phi = AlgReal::gen(5), one(5, 1L), z(5, 0L);
  CHECK(rs.is_positive_root({phi, one}));
  CHECK(rs.is_positive_root({phi, phi}));
  CHECK_FALSE(rs.is_root({one, one}));
  CHECK(rs.is_root({-phi, -one}));
  CHECK_FALSE(rs.is_positive_root({-phi, -one}));
  CHECK(rs.index_of_positive({one, z}) >= 0);
}

TEST_CASE("Euclidean realisation of I2(2n+1)") {
  int n = 2;
  AlgReal one(5, 1L), z(5, 0L);
  auto e0 = e_F({one, z}, n);
  auto e1 = e_F({z, one}, n);
  double th = std::numbers::pi / 5;
  CHECK(std::abs(e0.first - 1) < 1e-12);
  CHECK(std::abs(e1.first - std::cos(4 * th)) < 1e-12);
  CHECK(std::abs(e1.second - std::sin(4 * th)) < 1e-12);
}

TEST_CASE("bad types") {
  CHECK_THROWS_AS(CoxeterType::from_name("B", 3), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterType::I2(2), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterType::from_name("E", 9), std::invalid_argument);
}
