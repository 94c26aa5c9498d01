#pragma once

#include <stdexcept>
#include <vector>

#include "chebfold/chebring.hpp"

namespace cf {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> d;

  Mat() = default;
  Mat(int r, int c, const T& fill = T()) : rows(r), cols(c), d(static_cast<size_t>(r) * c, fill) {}

  T& operator()(int i, int j) { return d[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return d[static_cast<size_t>(i) * cols + j]; }

  bool square() const { return rows == cols; }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.d == b.d;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    return a.d < b.d;
  }
};

using IntMat = Mat<Int>;

template <class T>
Mat<T> from_rows(const std::vector<std::vector<T>>& rows) {
  Mat<T> m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline IntMat int_mat(const std::vector<std::vector<long>>& rows) {
  IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i].at(j);
  return m;
}

template <class T>
Mat<T> transpose(const Mat<T>& a) {
  Mat<T> t(a.cols, a.rows, a.d.empty() ? T() : a.d[0]);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b, const T& zero) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
  Mat<T> r(a.rows, b.cols, zero);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      for (int j = 0; j < b.cols; ++j) r(i, j) += a(i, k) * b(k, j);
  return r;
}

template <class T>
Mat<T> identity(int n, const T& zero, const T& one) {
  Mat<T> r(n, n, zero);
  for (int i = 0; i < n; ++i) r(i, i) = one;
  return r;
}

template <class T>
Mat<T> submatrix(const Mat<T>& a, const std::vector<int>& rs, const std::vector<int>& cs) {
  Mat<T> r(static_cast<int>(rs.size()), static_cast<int>(cs.size()), a.d.empty() ? T() : a.d[0]);
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = a(rs[i], cs[j]);
  return r;
}

// Laplace expansion; intended for sizes <= 5
template <class T>
T det_laplace(const Mat<T>& a, const T& zero, const T& one) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = a.rows;
  if (n == 0) return one;
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  T acc = zero;
  std::vector<int> rs, cs;
  for (int i = 1; i < n; ++i) rs.push_back(i);
  for (int j = 0; j < n; ++j) {
    cs.clear();
    for (int c = 0; c < n; ++c)
      if (c != j) cs.push_back(c);
    T minor = det_laplace(submatrix(a, rs, cs), zero, one);
    if (j % 2 == 0) acc += a(0, j) * minor;
    else acc -= a(0, j) * minor;
  }
  return acc;
}

// inverse of a matrix whose determinant is +1 or -1, by the adjugate
template <class T>
Mat<T> inverse_unimodular(const Mat<T>& a, const T& zero, const T& one, T* det_out = nullptr) {
  int n = a.rows;
  T det = det_laplace(a, zero, one);
  bool plus = det == one, minus = det == -one;
  if (!plus && !minus) throw ArithError("determinant is not +1 or -1");
  if (det_out) *det_out = det;
  Mat<T> inv(n, n, zero);
  std::vector<int> rs, cs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.clear();
      cs.clear();
      for (int r = 0; r < n; ++r)
        if (r != j) rs.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != i) cs.push_back(c);
      T cof = n == 1 ? one : det_laplace(submatrix(a, rs, cs), zero, one);
      if ((i + j) % 2) cof = -cof;
      inv(i, j) = minus ? T(-cof) : cof;
    }
  return inv;
}

// exact integer inverse via rational Gauss-Jordan, throws unless the inverse is integral
IntMat inverse_integer(const IntMat& a, Int* det_out = nullptr);
Int det_integer(const IntMat& a);

}  // namespace cf
