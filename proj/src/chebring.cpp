#include "chebfold/chebring.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace cf {

void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

static void divmod_monic(const IntPoly& a, const IntPoly& m, IntPoly* q, IntPoly& r) {
  if (m.empty() || m.back() != 1) throw ArithError("divisor is not monic");
  r = a;
  poly_trim(r);
  size_t dm = m.size() - 1;
  if (q) q->clear();
  if (r.size() <= dm) return;
  if (q) q->assign(r.size() - dm, Int(0));
  for (size_t i = r.size(); i-- > dm;) {
    Int c = r[i];
    if (c == 0) continue;
    if (q) (*q)[i - dm] = c;
    for (size_t j = 0; j <= dm; ++j) r[i - dm + j] -= c * m[j];
  }
  poly_trim(r);
  if (q) poly_trim(*q);
}

IntPoly poly_rem_monic(const IntPoly& a, const IntPoly& m) {
  IntPoly r;
  divmod_monic(a, m, nullptr, r);
  return r;
}

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& m) {
  IntPoly q, r;
  divmod_monic(a, m, &q, r);
  if (!r.empty()) throw ArithError("inexact polynomial division");
  return q;
}

IntPoly cyclotomic(int k) {
  if (k < 1) throw ArithError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  IntPoly p(k + 1);
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = poly_div_exact(p, cyclotomic(d));
  std::lock_guard<std::mutex> lk(mu);
  memo[k] = p;
  return p;
}

IntPoly cheb_v(int k) {
  IntPoly a{Int(1)}, b{Int(0), Int(1)};
  if (k == 0) return a;
  for (int i = 1; i < k; ++i) {
    IntPoly c = poly_sub(poly_mul(IntPoly{Int(0), Int(1)}, b), a);
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

IntPoly minimal_poly(int m) {
  if (m < 3) throw ArithError("minimal_poly needs m >= 3");
  IntPoly z = cyclotomic(2 * m);
  int d2 = static_cast<int>(z.size()) - 1;
  int d = d2 / 2;
  // z^{-d} Phi(z) = p_d + sum_k p_{d+k} (z^k + z^{-k}), and z^k + z^{-k} = T_k(y)
  IntPoly t0{Int(2)}, t1{Int(0), Int(1)};
  IntPoly q{z[d]};
  for (int k = 1; k <= d; ++k) {
    IntPoly tk = t1;
    if (k > 1) {
      // advance T: T_{j+1} = y T_j - T_{j-1}
      tk = poly_sub(poly_mul(IntPoly{Int(0), Int(1)}, t1), t0);
      t0 = t1;
      t1 = tk;
    }
    IntPoly term;
    for (const auto& c : tk) term.push_back(c * z[d + k]);
    q = poly_add(q, term);
  }
  return q;
}

namespace {

// exact data for Z[2cos(pi/m)] plus an isolating interval [lo, hi] / 2^bits of the root
struct Field {
  int m;
  IntPoly mp;
  int deg;
  std::vector<IntPoly> xpow;  // x^j mod mp for j < 2 deg
  mutable std::mutex mu;
  mutable int bits = 0;
  mutable Int lo, hi;
  mutable std::vector<Int> lopow, hipow;
};

int poly_sign_at(const IntPoly& p, const Int& num, int bits) {
  // sign of p(num / 2^bits)
  if (p.empty()) return 0;
  size_t d = p.size() - 1;
  Int acc = 0, pw = 1;
  for (size_t i = 0; i <= d; ++i) {
    acc += p[i] * pw * (Int(1) << static_cast<mp_bitcnt_t>(bits * (d - i)));
    pw *= num;
  }
  return sgn(acc);
}

void set_interval(const Field& f, const Int& lo, const Int& hi, int bits) {
  f.lo = lo;
  f.hi = hi;
  f.bits = bits;
  f.lopow.assign(f.deg, Int(1));
  f.hipow.assign(f.deg, Int(1));
  for (int i = 1; i < f.deg; ++i) {
    f.lopow[i] = f.lopow[i - 1] * lo;
    f.hipow[i] = f.hipow[i - 1] * hi;
  }
}

void refine(const Field& f, int extra) {
  Int lo = f.lo, hi = f.hi;
  int bits = f.bits;
  int slo = poly_sign_at(f.mp, lo, bits);
  for (int s = 0; s < extra; ++s) {
    lo *= 2;
    hi *= 2;
    ++bits;
    Int mid = (lo + hi) / 2;
    int sm = poly_sign_at(f.mp, mid, bits);
    if (sm == 0) {
      // rational root: cannot happen for deg > 1, the root is irrational
      throw ArithError("unexpected rational root");
    }
    if (sm == slo) lo = mid;
    else hi = mid;
  }
  set_interval(f, lo, hi, bits);
}

const Field& field(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> reg;
  std::lock_guard<std::mutex> lk(mu);
  auto it = reg.find(m);
  if (it != reg.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->m = m;
  f->mp = minimal_poly(m);
  f->deg = static_cast<int>(f->mp.size()) - 1;
  for (int j = 0; j < 2 * f->deg; ++j) {
    IntPoly xj(j + 1);
    xj[j] = 1;
    f->xpow.push_back(poly_rem_monic(xj, f->mp));
  }
  const int b0 = 40;
  long double alpha = 2.0L * std::cos(std::numbers::pi_v<long double> / m);
  Int c;
  c = static_cast<double>(std::floor(alpha * std::ldexp(1.0L, b0)));
  Int lo = c - 4, hi = c + 4;
  if (f->deg == 1) {
    Int r = -f->mp[0];
    lo = (r << b0) - 1;
    hi = (r << b0) + 1;
  } else {
    int sl = poly_sign_at(f->mp, lo, b0), sh = poly_sign_at(f->mp, hi, b0);
    if (sl == 0 || sh == 0 || sl == sh) throw ArithError("root isolation failed");
  }
  set_interval(*f, lo, hi, b0);
  auto& ref = *f;
  reg[m] = std::move(f);
  return ref;
}

// sign of p(alpha) from the current interval, 0 when undecided
int interval_sign(const Field& f, const std::vector<Int>& c) {
  size_t d = f.deg - 1;
  Int lower = 0, upper = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Int scale = Int(1) << static_cast<mp_bitcnt_t>(f.bits * (d - i));
    if (c[i] > 0) {
      lower += c[i] * f.lopow[i] * scale;
      upper += c[i] * f.hipow[i] * scale;
    } else {
      lower += c[i] * f.hipow[i] * scale;
      upper += c[i] * f.lopow[i] * scale;
    }
  }
  if (lower > 0) return 1;
  if (upper < 0) return -1;
  return 0;
}

}  // namespace

AlgReal::AlgReal(int m, long v) : AlgReal(m, Int(v)) {}

AlgReal::AlgReal(int m, const Int& v) : m_(m) {
  const Field& f = field(m);
  c_.assign(f.deg, Int(0));
  c_[0] = v;
}

AlgReal::AlgReal(int m, IntPoly poly) : m_(m) {
  const Field& f = field(m);
  c_.assign(f.deg, Int(0));
  for (size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (static_cast<int>(j) < f.deg) {
      c_[j] += poly[j];
    } else {
      IntPoly xj(j + 1);
      xj[j] = 1;
      IntPoly r = poly_rem_monic(xj, f.mp);
      for (size_t i = 0; i < r.size(); ++i) c_[i] += poly[j] * r[i];
    }
  }
}

AlgReal AlgReal::gen(int m) { return AlgReal(m, IntPoly{Int(0), Int(1)}); }

int AlgReal::degree_bound() const { return field(m_).deg; }

bool AlgReal::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

int AlgReal::sign() const {
  if (m_ == 0) throw ArithError("uninitialised AlgReal");
  if (is_zero()) return 0;
  const Field& f = field(m_);
  if (f.deg == 1) return sgn(c_[0]);
  std::lock_guard<std::mutex> lk(f.mu);
  for (;;) {
    int s = interval_sign(f, c_);
    if (s != 0) return s;
    refine(f, 64);
  }
}

long double AlgReal::to_long_double() const {
  long double alpha = 2.0L * std::cos(std::numbers::pi_v<long double> / m_);
  long double acc = 0, pw = 1;
  for (const auto& x : c_) {
    acc += static_cast<long double>(x.get_d()) * pw;
    pw *= alpha;
  }
  return acc;
}

double AlgReal::to_double() const { return static_cast<double>(to_long_double()); }

std::string AlgReal::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int v = c_[i];
    if (!first) os << (v < 0 ? "-" : "+");
    else if (v < 0) os << "-";
    Int a = v < 0 ? Int(-v) : v;
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void AlgReal::check(const AlgReal& o) const {
  if (m_ != o.m_) throw ArithError("AlgReal field mismatch");
}

AlgReal AlgReal::operator-() const {
  AlgReal r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

AlgReal& AlgReal::operator+=(const AlgReal& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgReal& AlgReal::operator-=(const AlgReal& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgReal& AlgReal::operator*=(const AlgReal& o) {
  check(o);
  const Field& f = field(m_);
  int d = f.deg;
  std::vector<Int> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Int> r(d);
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (prod[k] == 0) continue;
    const IntPoly& xk = f.xpow[k];
    for (size_t i = 0; i < xk.size(); ++i) r[i] += prod[k] * xk[i];
  }
  c_ = std::move(r);
  return *this;
}

bool operator==(const AlgReal& a, const AlgReal& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

bool operator<(const AlgReal& a, const AlgReal& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return a.c_ < b.c_;
}

int sgn(const AlgReal& a) { return a.sign(); }
AlgReal abs(const AlgReal& a) { return a.sign() < 0 ? -a : a; }

// ---------------------------------------------------------------- ChebElem

ChebElem::ChebElem(int n) : n_(n), a_(n) {
  if (n < 1) throw ArithError("Chebyshev rank must be >= 1");
}

ChebElem::ChebElem(int n, std::vector<Int> coeffs) : n_(n), a_(std::move(coeffs)) {
  if (n < 1) throw ArithError("Chebyshev rank must be >= 1");
  if (static_cast<int>(a_.size()) != n) throw ArithError("ChebElem needs exactly n coefficients");
}

ChebElem::ChebElem(int n, const std::vector<long>& coeffs) : ChebElem(n) {
  if (static_cast<int>(coeffs.size()) != n) throw ArithError("ChebElem needs exactly n coefficients");
  for (int i = 0; i < n; ++i) a_[i] = coeffs[i];
}

ChebElem ChebElem::theta(int n, int k) {
  if (k < 0 || k >= n) throw ArithError("theta index out of range");
  ChebElem e(n);
  e.a_[k] = 1;
  return e;
}

ChebElem ChebElem::constant(int n, long v) {
  ChebElem e(n);
  e.a_[0] = v;
  return e;
}

bool ChebElem::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool ChebElem::in_semiring() const {
  for (const auto& x : a_)
    if (x < 0) return false;
  return true;
}

bool ChebElem::one_signed() const {
  bool pos = false, neg = false;
  for (const auto& x : a_) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  return !(pos && neg);
}

std::string ChebElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (a_[i] == 0) continue;
    Int v = a_[i];
    if (!first) os << (v < 0 ? "-" : "+");
    else if (v < 0) os << "-";
    Int a = v < 0 ? Int(-v) : v;
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "t" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ChebElem ChebElem::operator-() const {
  ChebElem r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

ChebElem& ChebElem::operator+=(const ChebElem& o) {
  if (n_ != o.n_) throw ArithError("Chebyshev rank mismatch");
  for (int i = 0; i < n_; ++i) a_[i] += o.a_[i];
  return *this;
}

ChebElem& ChebElem::operator-=(const ChebElem& o) {
  if (n_ != o.n_) throw ArithError("Chebyshev rank mismatch");
  for (int i = 0; i < n_; ++i) a_[i] -= o.a_[i];
  return *this;
}

const std::vector<int>& cheb_basis_product(int n, int k, int l) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> tables;
  std::lock_guard<std::mutex> lk(mu);
  auto it = tables.find(n);
  if (it == tables.end()) {
    std::vector<std::vector<int>> t(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int hi = std::max(a, b), lo = std::min(a, b);
        for (int j = 0; j <= lo; ++j) {
          int idx = hi - lo + 2 * j;
          if (idx == 2 * n) continue;
          if (idx >= n) idx = 2 * n - 1 - idx;
          t[a * n + b].push_back(idx);
        }
      }
    it = tables.emplace(n, std::move(t)).first;
  }
  return it->second[k * n + l];
}

ChebElem operator*(const ChebElem& a, const ChebElem& b) {
  if (a.n_ != b.n_) throw ArithError("Chebyshev rank mismatch");
  int n = a.n_;
  ChebElem r(n);
  for (int k = 0; k < n; ++k) {
    if (a.a_[k] == 0) continue;
    for (int l = 0; l < n; ++l) {
      if (b.a_[l] == 0) continue;
      Int p = a.a_[k] * b.a_[l];
      for (int idx : cheb_basis_product(n, k, l)) r.a_[idx] += p;
    }
  }
  return r;
}

bool operator==(const ChebElem& a, const ChebElem& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

bool operator<(const ChebElem& a, const ChebElem& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.a_ < b.a_;
}

ChebElem cheb_mul(const ChebElem& a, const ChebElem& b) { return a * b; }

std::vector<std::vector<Int>> reg_rep(int k, int n) {
  if (n < 1 || k < 0 || k >= n) throw ArithError("reg_rep index out of range");
  return reg_rep(ChebElem::theta(n, k));
}

std::vector<std::vector<Int>> reg_rep(const ChebElem& r) {
  int n = r.n();
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (int j = 0; j < n; ++j) {
    ChebElem col = r * ChebElem::theta(n, j);
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

static const std::vector<AlgReal>& sigma_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<AlgReal>> memo;
  std::lock_guard<std::mutex> lk(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<AlgReal> v;
  for (int k = 0; k < n; ++k) v.emplace_back(2 * n + 1, cheb_v(k));
  return memo.emplace(n, std::move(v)).first->second;
}

AlgReal sigma(const ChebElem& a) {
  int n = a.n();
  const auto& basis = sigma_basis(n);
  AlgReal r(2 * n + 1, 0L);
  for (int k = 0; k < n; ++k) {
    if (a[k] == 0) continue;
    r += AlgReal(2 * n + 1, a[k]) * basis[k];
  }
  return r;
}

bool equal_in_zhat(const ChebElem& a, const ChebElem& b) { return sigma(a) == sigma(b); }

int sgn(const ChebElem& a) { return sigma(a).sign(); }

ChebElem abs(const ChebElem& a) { return sgn(a) < 0 ? -a : a; }

bool cheb_leq(const ChebElem& r, const ChebElem& s) {
  if (r == s) return true;
  return (sigma(s) - sigma(r)).sign() > 0;
}

}  // namespace cf
