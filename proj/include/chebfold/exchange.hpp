#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebfold/matrix.hpp"

namespace cf {

struct MutationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sgn_of(const Int& x) { return sgn(x); }
template <class T>
int sgn_of(const T& x) {
  return sgn(x);
}

// Mutation at column k. Works on square exchange matrices and on extended
// matrices with extra rows (B stacked over C).
template <class T>
Mat<T> mutate(const Mat<T>& b, int k) {
  if (k < 0 || k >= b.cols || k >= b.rows) throw MutationError("invalid mutation vertex " + std::to_string(k));
  Mat<T> r = b;
  std::vector<int> sk(b.cols);
  for (int j = 0; j < b.cols; ++j) sk[j] = sgn_of(b(k, j));
  for (int i = 0; i < b.rows; ++i) {
    int si = sgn_of(b(i, k));
    for (int j = 0; j < b.cols; ++j) {
      if (i == k || j == k) {
        r(i, j) = -b(i, j);
      } else if (si != 0 && si == sk[j]) {
        if (si > 0) r(i, j) += b(i, k) * b(k, j);
        else r(i, j) -= b(i, k) * b(k, j);
      }
    }
  }
  return r;
}

template <class T>
bool is_zero_elem(const T& x) {
  return sgn_of(x) == 0;
}

// mutation at every vertex of e; the e x e block must vanish
template <class T>
Mat<T> composite_mutate(const Mat<T>& s, const std::vector<int>& e) {
  for (int a : e)
    for (int b : e)
      if (a != b && !is_zero_elem(s(a, b)))
        throw MutationError("composite mutation refused: block entry (" + std::to_string(a) + "," +
                            std::to_string(b) + ") is nonzero");
  Mat<T> r = s;
  for (int v : e) r = mutate(r, v);
  return r;
}

template <class T>
Mat<T> mutate_word(Mat<T> b, const std::vector<int>& word) {
  for (int k : word) b = mutate(b, k);
  return b;
}

// P^{-1} B P, entry (i,j) scaled by p_j / p_i; T needs division
template <class T>
Mat<T> rescale(const Mat<T>& b, const std::vector<T>& p) {
  if (static_cast<int>(p.size()) != b.rows || !b.square()) throw std::invalid_argument("rescale size mismatch");
  for (const auto& x : p)
    if (sgn_of(x) <= 0) throw std::invalid_argument("rescale needs positive diagonal entries");
  Mat<T> r = b;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) r(i, j) = b(i, j) * p[j] / p[i];
  return r;
}

template <class T>
bool is_skew_symmetric(const Mat<T>& b) {
  if (!b.square()) return false;
  for (int i = 0; i < b.rows; ++i) {
    if (!is_zero_elem(b(i, i))) return false;
    for (int j = i + 1; j < b.cols; ++j)
      if (!is_zero_elem(b(i, j) + b(j, i))) return false;
  }
  return true;
}

// B D skew-symmetric for the given positive diagonal d
template <class T>
bool is_skew_symmetrized_by(const Mat<T>& b, const std::vector<T>& d) {
  Mat<T> bd = b;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) bd(i, j) = b(i, j) * d[j];
  return is_skew_symmetric(bd);
}

// arrows i -> j carry positive weight b_ij
template <class T>
struct RQuiver {
  struct Arrow {
    int from, to;
    T weight;
  };
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<T> vertex_weights;  // optional

  // (R1)-(R3): no loops, no 2-cycles, at most one arrow per pair, weights > 0
  std::optional<std::string> violation() const {
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (const auto& a : arrows) {
      if (a.from < 0 || a.to < 0 || a.from >= n || a.to >= n) return "arrow endpoint out of range";
      if (a.from == a.to) return "loop at vertex " + std::to_string(a.from);
      if (sgn_of(a.weight) <= 0) return "non-positive arrow weight";
      if (seen[a.from][a.to]) return "parallel arrows";
      if (seen[a.to][a.from]) return "2-cycle";
      seen[a.from][a.to] = 1;
    }
    for (const auto& w : vertex_weights)
      if (sgn_of(w) <= 0) return "non-positive vertex weight";
    return std::nullopt;
  }
};

template <class T>
RQuiver<T> to_quiver(const Mat<T>& b) {
  if (!is_skew_symmetric(b)) throw std::invalid_argument("to_quiver needs a skew-symmetric matrix");
  RQuiver<T> q;
  q.n = b.rows;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      if (sgn_of(b(i, j)) > 0) q.arrows.push_back({i, j, b(i, j)});
  return q;
}

template <class T>
Mat<T> from_quiver(const RQuiver<T>& q, const T& zero) {
  if (auto v = q.violation()) throw std::invalid_argument("invalid R-quiver: " + *v);
  Mat<T> b(q.n, q.n, zero);
  for (const auto& a : q.arrows) {
    b(a.from, a.to) = a.weight;
    b(a.to, a.from) = -a.weight;
  }
  return b;
}

}  // namespace cf
