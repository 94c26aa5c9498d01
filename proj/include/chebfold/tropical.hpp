#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chebfold/rootsys.hpp"
#include "chebfold/unfolding.hpp"

namespace cf {

// tropical y-seed: B stacked over C
template <class T>
struct Seed {
  Mat<T> ext;
  std::vector<int> word;

  int rank() const { return ext.cols; }
  Mat<T> B() const {
    std::vector<int> r(rank()), c(rank());
    for (int i = 0; i < rank(); ++i) r[i] = c[i] = i;
    return submatrix(ext, r, c);
  }
  Mat<T> C() const {
    std::vector<int> r(rank()), c(rank());
    for (int i = 0; i < rank(); ++i) r[i] = rank() + i, c[i] = i;
    return submatrix(ext, r, c);
  }
};

using FSeed = Seed<AlgReal>;
using USeed = Seed<Int>;

template <class T>
Seed<T> initial_seed(const Mat<T>& B, const T& zero, const T& one) {
  if (!B.square()) throw std::invalid_argument("initial seed needs a square exchange matrix");
  int r = B.rows;
  Seed<T> s;
  s.ext = Mat<T>(2 * r, r, zero);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) s.ext(i, j) = B(i, j);
    s.ext(r + i, i) = one;
  }
  return s;
}

template <class T>
Seed<T> mutate_seed(const Seed<T>& s, int k) {
  Seed<T> r{mutate(s.ext, k), s.word};
  r.word.push_back(k);
  return r;
}

// G = (C^T)^{-1}
ZMat g_matrix(const FSeed& s);
IntMat g_matrix(const USeed& s);
ZMat g_matrix_of(const ZMat& C);

// column k of G after mutating at k:
// -g_k + sum_i [eps b_ik]_+ g_i - sum_i [eps c_ik]_+ b0_i
std::vector<AlgReal> g_mutation_column(const ZMat& G, const ZMat& B, const ZMat& C, const ZMat& B0, int k, int eps);

// (ChebElem) r_[a][b] read off the first column of each block; empty optional entries mean a block outside rho
struct BlockReport {
  bool in_rho = true, one_signed = true, commute = true, det_unit = true, det_sigma = true;
  ChebElem detX;
  std::string note;
  bool pass() const { return in_rho && one_signed && commute && det_unit && det_sigma; }
};

BlockReport block_check(const FoldingSpec& spec, const IntMat& C, const ZMat& Cf);

CoxeterType folded_coxeter_type(const FoldingSpec& spec);

struct CubeReport {
  bool pass = true;
  int64_t words = 0, steps = 0;
  int depth = 0, random_words = 0, random_length = 0;
  uint64_t seed = 0;
  int g_formula_eps = 0;
  // first failure per category
  std::map<std::string, std::string> failures;
  bool ok(const std::string& category) const { return failures.count(category) == 0; }
  bool ok_all(const std::vector<std::string>& categories) const;
  void merge(const CubeReport& o);
};

// categories: cube_c, cube_g, inverse, g_formula, conditions, roots, sign_coherent,
// blocks, commute, det_c, det_cf, det_sigma, det_alternates
extern const std::vector<std::string> kCubeFaceChecks, kRootChecks, kBlockChecks;

CubeReport verify_cube(const FoldingSpec& spec, const std::vector<int>& word);
CubeReport verify_cube_walks(const FoldingSpec& spec, int depth, int random_words, int random_length,
                             uint64_t seed);

struct SeedEnumeration {
  std::vector<FSeed> seeds;  // labelled, in BFS order
  size_t unlabelled = 0;
  bool cap_reached = false;
};

// BFS over (B, C) with memo on the exact matrix; unlabelled count mods out simultaneous relabelling
SeedEnumeration enumerate_seeds(const ZMat& B, size_t cap = 100000);

// columns sorted, for comparison up to column permutation
ZMat sort_columns(const ZMat& G);

}  // namespace cf
