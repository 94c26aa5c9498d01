#pragma once

#include <gmpxx.h>

#include <string>

#include "chebfold/chebring.hpp"

namespace cf {

// a + b sqrt(d) over Q, d a positive non-square integer
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(long d, mpq_class a, mpq_class b = 0) : d_(d), a_(std::move(a)), b_(std::move(b)) {}

  static QuadRat root(long d) { return QuadRat(d, 0, 1); }

  long d() const { return d_; }
  const mpq_class& rational() const { return a_; }
  const mpq_class& radical() const { return b_; }

  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with d b^2
    mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    return c > 0 ? sa : (c < 0 ? sb : 0);
  }

  std::string str() const { return a_.get_str() + "+" + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")"; }

  QuadRat operator-() const { return QuadRat(d_, -a_, -b_); }
  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    long d = join(x, y);
    return QuadRat(d, x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return x + (-y); }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    long d = join(x, y);
    return QuadRat(d, x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    long d = join(x, y);
    mpq_class nrm = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (nrm == 0) throw ArithError("division by zero in quadratic extension");
    QuadRat conj(d, y.a_ / nrm, -y.b_ / nrm);
    return x * conj;
  }
  QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
  QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
  QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }
  friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }

 private:
  // rational elements carry d = 0 until combined with a radical
  static long join(const QuadRat& x, const QuadRat& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    throw ArithError("mixing different quadratic extensions");
  }
  long d_ = 0;
  mpq_class a_ = 0, b_ = 0;
};

inline int sgn(const QuadRat& x) { return x.sign(); }

}  // namespace cf
