#include "chebfold/matrix.hpp"

namespace cf {

Int det_integer(const IntMat& a) {
  // Bareiss fraction-free elimination
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = a.rows;
  if (n == 0) return 1;
  IntMat m = a;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMat inverse_integer(const IntMat& a, Int* det_out) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows;
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw ArithError("singular matrix");
    std::swap(m[p], m[c]);
    mpq_class piv = m[c][c];
    for (int j = 0; j < 2 * n; ++j) m[c][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = m[i][n + j];
      if (q.get_den() != 1) throw ArithError("inverse is not integral");
      inv(i, j) = q.get_num();
    }
  if (det_out) *det_out = det_integer(a);
  return inv;
}

}  // namespace cf
