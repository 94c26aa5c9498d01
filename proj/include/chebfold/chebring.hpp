#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

using Int = mpz_class;

// integer polynomial, coefficient i belongs to x^i, no trailing zeros
using IntPoly = std::vector<Int>;

void poly_trim(IntPoly& p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// remainder modulo a monic polynomial
IntPoly poly_rem_monic(const IntPoly& a, const IntPoly& m);
// exact quotient by a monic polynomial, throws if the remainder is nonzero
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& m);

IntPoly cyclotomic(int k);
IntPoly minimal_poly(int m);
// V_0 = 1, V_1 = x, V_{k+1} = x V_k - V_{k-1}; V_k(x) = U_k(x/2)
IntPoly cheb_v(int k);

struct ArithError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// element of Z[2cos(pi/m)], stored as a polynomial reduced mod minimal_poly(m)
class AlgReal {
 public:
  AlgReal() = default;
  AlgReal(int m, long v);
  AlgReal(int m, const Int& v);
  AlgReal(int m, IntPoly poly);

  static AlgReal gen(int m);  // the class of x = 2cos(pi/m)

  int m() const { return m_; }
  const std::vector<Int>& coeffs() const { return c_; }
  int degree_bound() const;

  bool is_zero() const;
  int sign() const;
  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  AlgReal operator-() const;
  AlgReal& operator+=(const AlgReal& o);
  AlgReal& operator-=(const AlgReal& o);
  AlgReal& operator*=(const AlgReal& o);
  friend AlgReal operator+(AlgReal a, const AlgReal& b) { return a += b; }
  friend AlgReal operator-(AlgReal a, const AlgReal& b) { return a -= b; }
  friend AlgReal operator*(AlgReal a, const AlgReal& b) { return a *= b; }
  friend bool operator==(const AlgReal& a, const AlgReal& b);
  friend bool operator!=(const AlgReal& a, const AlgReal& b) { return !(a == b); }
  // lexicographic on coefficients, for use as a map key only
  friend bool operator<(const AlgReal& a, const AlgReal& b);

 private:
  void check(const AlgReal& o) const;
  int m_ = 0;
  std::vector<Int> c_;
};

int sgn(const AlgReal& a);
AlgReal abs(const AlgReal& a);

// element of the Chebyshev ring with basis theta_0..theta_{n-1}
class ChebElem {
 public:
  ChebElem() = default;
  explicit ChebElem(int n);
  ChebElem(int n, std::vector<Int> coeffs);
  ChebElem(int n, const std::vector<long>& coeffs);

  static ChebElem theta(int n, int k);
  static ChebElem constant(int n, long v);

  int n() const { return n_; }
  const std::vector<Int>& coeffs() const { return a_; }
  const Int& operator[](int k) const { return a_.at(k); }

  bool is_zero() const;
  bool in_semiring() const;  // all coefficients >= 0
  bool one_signed() const;   // all >= 0 or all <= 0
  std::string str() const;

  ChebElem operator-() const;
  ChebElem& operator+=(const ChebElem& o);
  ChebElem& operator-=(const ChebElem& o);
  friend ChebElem operator+(ChebElem a, const ChebElem& b) { return a += b; }
  friend ChebElem operator-(ChebElem a, const ChebElem& b) { return a -= b; }
  friend ChebElem operator*(const ChebElem& a, const ChebElem& b);
  ChebElem& operator*=(const ChebElem& o) { return *this = *this * o; }
  friend bool operator==(const ChebElem& a, const ChebElem& b);
  friend bool operator!=(const ChebElem& a, const ChebElem& b) { return !(a == b); }
  friend bool operator<(const ChebElem& a, const ChebElem& b);

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

ChebElem cheb_mul(const ChebElem& a, const ChebElem& b);
// index list of theta_k * theta_l after rewriting into the basis
const std::vector<int>& cheb_basis_product(int n, int k, int l);
std::vector<std::vector<Int>> reg_rep(int k, int n);
std::vector<std::vector<Int>> reg_rep(const ChebElem& r);

AlgReal sigma(const ChebElem& a);
bool equal_in_zhat(const ChebElem& a, const ChebElem& b);
int sgn(const ChebElem& a);  // sign through sigma
ChebElem abs(const ChebElem& a);
// partial order: r = s or sigma(r) < sigma(s)
bool cheb_leq(const ChebElem& r, const ChebElem& s);

}  // namespace cf
