#include <doctest.h>

#include <cmath>
#include <numeric>
#include <numbers>

#include "chebfold/chebring.hpp"

using namespace cf;

namespace {

// reduce polynomial products modulo V_n - V_{n-1}, then read off V-coordinates
std::vector<Int> oracle_product(int n, int k, int l) {
  IntPoly mod = poly_sub(cheb_v(n), cheb_v(n - 1));
  IntPoly p = poly_rem_monic(poly_mul(cheb_v(k), cheb_v(l)), mod);
  std::vector<Int> c(n, 0);
  for (int d = n - 1; d >= 0; --d) {
    Int lead = d < static_cast<int>(p.size()) ? p[d] : Int(0);
    c[d] = lead;
    if (lead != 0) {
      IntPoly t = cheb_v(d);
      for (auto& x : t) x *= lead;
      p = poly_sub(p, t);
    }
  }
  for (const auto& x : p) REQUIRE(x == 0);
  return c;
}

double cos_pi(int m) { return 2 * std::cos(std::numbers::pi / m); }

}  // namespace

TEST_CASE("theta products agree with polynomial multiplication mod V_n - V_{n-1}") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        ChebElem p = ChebElem::theta(n, k) * ChebElem::theta(n, l);
        CHECK(p.coeffs() == oracle_product(n, k, l));
      }
}

TEST_CASE("Chebyshev ring is commutative and associative") {
  int n = 4;
  ChebElem a(n, std::vector<long>{1, -2, 0, 3}), b(n, std::vector<long>{0, 1, 1, -1}), c(n, std::vector<long>{2, 0, -1, 1});
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(ChebElem::theta(n, 0) * a == a);
}

TEST_CASE("regular representation is multiplicative and symmetric") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        auto rk = reg_rep(k, n), rl = reg_rep(l, n);
        auto rkl = reg_rep(ChebElem::theta(n, k) * ChebElem::theta(n, l));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int t = 0; t < n; ++t) s += rk[i][t] * rl[t][j];
            CHECK(s == rkl[i][j]);
            CHECK(rk[i][j] == rk[j][i]);
          }
      }
}

TEST_CASE("cyclotomic polynomials") {
  IntPoly phi14 = cyclotomic(14);
  IntPoly expect{1, -1, 1, -1, 1, -1, 1};
  CHECK(phi14 == expect);
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  // x^n - 1 is the product over divisors
  for (int n : {6, 10, 15, 18}) {
    IntPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic(d));
    IntPoly xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    CHECK(prod == xn);
  }
}

TEST_CASE("minimal polynomial of 2cos(pi/m) vanishes numerically and has the right degree") {
  auto totient = [](int k) {
    int c = 0;
    for (int i = 1; i <= k; ++i) c += std::gcd(i, k) == 1;
    return c;
  };
  for (int m = 3; m <= 20; ++m) {
    IntPoly p = minimal_poly(m);
    CHECK(static_cast<int>(p.size()) - 1 == totient(2 * m) / 2);
    CHECK(p.back() == 1);
    double x = cos_pi(m), v = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) v = v * x + p[i].get_d();
    CHECK(std::abs(v) < 1e-9);
  }
}

TEST_CASE("AlgReal arithmetic and exact signs") {
  AlgReal phi = AlgReal::gen(5);
  CHECK(phi * phi == phi + AlgReal(5, 1L));
  AlgReal r3 = AlgReal::gen(6);
  CHECK(r3 * r3 == AlgReal(6, 3L));
  CHECK((r3 - AlgReal(6, 2L)).sign() < 0);
  // F(k+1) - phi F(k) has the sign of F(k+1)^2 - F(k+1) F(k) - F(k)^2
  Int a = 1, b = 1;
  for (int k = 0; k < 40; ++k) {
    AlgReal d = AlgReal(5, b) - phi * AlgReal(5, a);
    Int norm = b * b - a * b - a * a;
    CHECK(d.sign() == sgn(norm));
    Int c = a + b;
    a = b;
    b = c;
  }
  for (int m = 3; m <= 15; ++m) {
    AlgReal x = AlgReal::gen(m);
    CHECK(std::abs(x.to_double() - cos_pi(m)) < 1e-12);
    CHECK(x.sign() == 1);
    CHECK((x - AlgReal(m, 2L)).sign() == -1);
  }
}

TEST_CASE("sigma evaluates theta_k at 2cos(pi/(2n+1))") {
  for (int n = 2; n <= 6; ++n) {
    double x = cos_pi(2 * n + 1);
    for (int k = 0; k < n; ++k) {
      double expect = std::sin((k + 1) * std::numbers::pi / (2 * n + 1)) / std::sin(std::numbers::pi / (2 * n + 1));
      CHECK(std::abs(sigma(ChebElem::theta(n, k)).to_double() - expect) < 1e-12);
      CHECK(sigma(ChebElem::theta(n, k)).sign() == 1);
    }
    (void)x;
  }
}

TEST_CASE("sigma relation holds at n = 4 only") {
  AlgReal at9 = AlgReal(9, cheb_v(3));
  CHECK(at9 == AlgReal(9, 1L) + AlgReal::gen(9));
  CHECK(sigma(ChebElem::theta(4, 3)) == sigma(ChebElem::theta(4, 0)) + sigma(ChebElem::theta(4, 1)));
  CHECK(equal_in_zhat(ChebElem::theta(4, 3), ChebElem::theta(4, 0) + ChebElem::theta(4, 1)));
  AlgReal at7 = AlgReal(7, cheb_v(3));
  CHECK(at7 != AlgReal(7, 1L) + AlgReal::gen(7));
}

TEST_CASE("sigma is a ring homomorphism") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        CHECK(sigma(ChebElem::theta(n, k) * ChebElem::theta(n, l)) ==
              sigma(ChebElem::theta(n, k)) * sigma(ChebElem::theta(n, l)));
}

TEST_CASE("partial order through sigma") {
  int n = 3;
  ChebElem t0 = ChebElem::theta(n, 0), t1 = ChebElem::theta(n, 1), t2 = ChebElem::theta(n, 2);
  CHECK(cheb_leq(t0, t1));
  CHECK(cheb_leq(t1, t2));
  CHECK_FALSE(cheb_leq(t2, t1));
  CHECK(cheb_leq(t1, t1));
  CHECK(sgn(t0 - t1) == -1);
  CHECK(abs(t0 - t1) == t1 - t0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(ChebElem::theta(3, 3), ArithError);
  CHECK_THROWS_AS(ChebElem::theta(3, 0) * ChebElem::theta(4, 0), ArithError);
  CHECK_THROWS_AS(AlgReal::gen(5) + AlgReal::gen(7), ArithError);
}
