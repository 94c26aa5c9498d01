#include <doctest.h>

#include <random>

#include "chebfold/exchange.hpp"
#include "chebfold/quadext.hpp"
#include "chebfold/unfolding.hpp"

using namespace cf;

namespace {

IntMat random_skew(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  IntMat b(n, n, Int(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = d(rng);
      b(j, i) = -b(i, j);
    }
  return b;
}

// b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
IntMat fz_mutation(const IntMat& b, int k) {
  IntMat r = b;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      if (i == k || j == k) {
        r(i, j) = -b(i, j);
      } else {
        Int t = abs(b(i, k)) * b(k, j) + b(i, k) * abs(b(k, j));
        r(i, j) = b(i, j) + t / 2;
      }
    }
  return r;
}

}  // namespace

TEST_CASE("mutation matches the absolute value formula and is an involution") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;
    IntMat b = random_skew(rng, n);
    for (int k = 0; k < n; ++k) {
      IntMat m = mutate(b, k);
      CHECK(m == fz_mutation(b, k));
      CHECK(mutate(m, k) == b);
      CHECK(is_skew_symmetric(m));
    }
  }
}

TEST_CASE("extended matrices mutate column-wise") {
  IntMat e = int_mat({{0, 1}, {-1, 0}, {1, 0}, {0, 1}});
  IntMat m = mutate(e, 0);
  CHECK(m == int_mat({{0, -1}, {1, 0}, {-1, 1}, {0, 1}}));
  CHECK(mutate(m, 0) == e);
}

TEST_CASE("rank-2 phi matrix flips sign") {
  AlgReal phi = AlgReal::gen(5), z(5, 0L);
  ZMat b(2, 2, z);
  b(0, 1) = phi;
  b(1, 0) = -phi;
  ZMat m = mutate(b, 0);
  CHECK(m(0, 1) == -phi);
  CHECK(m(1, 0) == phi);
  CHECK_THROWS_AS(mutate(b, 2), MutationError);
}

TEST_CASE("composite mutation refuses nonzero blocks and commutes inside a block") {
  IntMat s = int_mat({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  CHECK_THROWS_AS(composite_mutate(s, {0, 1}), MutationError);
  IntMat a = composite_mutate(s, {0, 2});
  IntMat b = mutate(mutate(s, 2), 0);
  CHECK(a == b);
}

TEST_CASE("skew-symmetrizable F4 matrix and its rescaling") {
  IntMat bt = int_mat({{0, -1, 0, 0}, {1, 0, -1, 0}, {0, 2, 0, -1}, {0, 0, 1, 0}});
  std::vector<Int> d{1, 1, 2, 2};
  CHECK(is_skew_symmetrized_by(bt, d));
  for (int k = 0; k < 4; ++k) CHECK(is_skew_symmetrized_by(mutate(bt, k), d));

  QuadRat one(2, 1), zero(2, 0), r2 = QuadRat::root(2);
  Mat<QuadRat> bq(4, 4, zero);
  bq(0, 1) = -one;
  bq(1, 0) = one;
  bq(1, 2) = -r2;
  bq(2, 1) = r2;
  bq(2, 3) = -one;
  bq(3, 2) = one;
  std::vector<QuadRat> p{one, one, QuadRat(2, 0, mpq_class(1, 2)), QuadRat(2, 0, mpq_class(1, 2))};
  auto lift = [&](const IntMat& m) {
    Mat<QuadRat> q(4, 4, zero);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) q(i, j) = QuadRat(2, mpq_class(m(i, j)));
    return q;
  };
  CHECK(rescale(bq, p) == lift(bt));
  for (int k = 0; k < 4; ++k) CHECK(rescale(mutate(bq, k), p) == lift(mutate(bt, k)));
}

TEST_CASE("R-quivers round trip and report violations") {
  AlgReal phi = AlgReal::gen(5), z(5, 0L);
  ZMat b(3, 3, z);
  b(0, 1) = AlgReal(5, 1L);
  b(1, 0) = AlgReal(5, -1L);
  b(1, 2) = phi;
  b(2, 1) = -phi;
  auto q = to_quiver(b);
  CHECK(q.arrows.size() == 2);
  CHECK_FALSE(q.violation());
  CHECK(from_quiver(q, z) == b);
  q.arrows.push_back({2, 1, phi});
  CHECK(q.violation());
  RQuiver<AlgReal> bad;
  bad.n = 2;
  bad.arrows.push_back({0, 0, phi});
  CHECK(*bad.violation() == "loop at vertex 0");
  bad.arrows = {{0, 1, -phi}};
  CHECK(bad.violation());
}
