#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chebfold/exchange.hpp"
#include "chebfold/quadext.hpp"

namespace cf {

using ZMat = Mat<AlgReal>;
using ChebMat = Mat<ChebElem>;

// A weighted folding F: Q^g -> Q^g'. Unfolded vertices are stored block by
// block, and inside a block by Chebyshev index when cheb_n > 0.
struct FoldingSpec {
  std::string name;
  int m = 3;       // folded entries live in Z[2cos(pi/m)]
  int cheb_n = 0;  // block size / Chebyshev rank when blocks are rho-structured, else 0
  IntMat S;
  ZMat B;  // rescaled folded matrix
  std::vector<int> F;
  std::vector<std::vector<int>> blocks;
  std::vector<AlgReal> vw;
  std::vector<int> kappa;  // vw(i) = sigma(theta_kappa(i)); -1 when not applicable
  std::vector<std::string> labels, folded_labels;
  // optional unrescaled matrix over a quadratic extension, with B = P^{-1} Bq P
  std::optional<Mat<QuadRat>> Bq;
  std::vector<QuadRat> P;

  int size() const { return S.rows; }
  int folded_size() const { return B.rows; }
  AlgReal zero() const { return AlgReal(m, 0L); }
  AlgReal one() const { return AlgReal(m, 1L); }
  // unfolded vertex with weight 1 in block b
  int unit_vertex(int b) const;
  std::vector<int> lift(const std::vector<int>& word) const;
};

struct ConditionFailure {
  int block_i = -1, block_j = -1, column = -1;
  std::string kind;  // "sum", "sign", "mixed-sign"
  std::string expected, actual;
};

struct ConditionReport {
  bool pass = true;
  std::vector<ConditionFailure> failures;
};

// conditions (1),(2) for W S W^{-1} against B
ConditionReport check_conditions(const IntMat& S, const ZMat& B, const std::vector<std::vector<int>>& blocks,
                                 const std::vector<AlgReal>& w);

struct UnfoldingReport {
  bool pass = true;
  int64_t words = 0;
  int64_t nodes = 0;
  int depth = 0;
  int random_words = 0, random_length = 0;
  uint64_t seed = 0;
  std::vector<int> failing_word;
  ConditionReport failure;
  std::string error;
};

UnfoldingReport check_weighted_unfolding(const FoldingSpec& spec, const std::vector<std::vector<int>>& words);
UnfoldingReport check_weighted_unfolding(const FoldingSpec& spec, int depth, int random_words, int random_length,
                                         uint64_t seed);

// kind: "I2" (A_2n -> I2(2n+1), n >= 2), "H3", "H4", "F4E6", "I2series" (A_k -> I2(k+1), k = n >= 2)
FoldingSpec standard_folding(const std::string& kind, int n = 0);
std::vector<std::string> standard_kinds();

// S with blocks rho(b'_{[i][j]}), entries of b' in {0, +-1, +-theta_1}
IntMat build_unfolded_matrix(const ChebMat& Bc);
IntMat build_unfolded_matrix(const ZMat& B, int n);
// lift an entry of Z[2cos(pi/(2n+1))] to {0, +-1, +-theta_1}
std::optional<ChebElem> lift_entry(const AlgReal& x, int n);

std::vector<AlgReal> dF(const FoldingSpec& spec, const std::vector<Int>& v);
std::vector<AlgReal> dF(const FoldingSpec& spec, const std::vector<int>& v);
// columns at weight-1 vertices pushed through d_F
ZMat matrix_dF(const FoldingSpec& spec, const IntMat& X);

}  // namespace cf
