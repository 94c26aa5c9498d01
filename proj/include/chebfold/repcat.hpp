#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chebfold/rootsys.hpp"
#include "chebfold/unfolding.hpp"

namespace cf {

using DimVec = std::vector<int>;

struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::string> labels;

  static Quiver from_matrix(const IntMat& S, const std::vector<std::string>& labels = {});
  Quiver opposite() const;
  // number of paths i -> j
  std::vector<std::vector<int>> path_counts() const;
};

// bipartite orientation, vertex 0 a source; type "A", "D" or "E"
Quiver dynkin_quiver(const std::string& type, int p);

// <d, e> = sum d_i e_i - sum_{i->j} d_i e_j
long euler_form(const Quiver& q, const DimVec& d, const DimVec& e);

struct IndecClass {
  DimVec dim;
  int vertex = -1;  // tau-orbit label: M = tau^{-t} P(vertex)
  int t = 0;
  int col = 0;  // slice coordinate used for layout
  int proj_of = -1, inj_of = -1;
  int tau = -1, tau_inv = -1;
};

struct ARQuiver {
  Quiver q;
  std::vector<IndecClass> mods;  // topological order
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::vector<int>> preds, succs;
  std::vector<int> proj, inj, simple;  // index of P(i), I(i), S(i)
  std::vector<std::vector<int>> hom;   // hom[M][N]

  int size() const { return static_cast<int>(mods.size()); }
  int find(const DimVec& d) const;
  int hom_dim(int M, int N) const { return hom[M][N]; }
  int ext_dim(int M, int N) const;
};

ARQuiver knit_ar_quiver(const Quiver& q);

// exact data of a standard folding together with its AR quiver
struct FoldedCategory {
  FoldingSpec spec;
  ARQuiver ar;
  RootSet roots;  // roots of the folded type
  int n = 0;      // Chebyshev rank (2 for H types)
  std::vector<ZVec> proj_dims;
  std::vector<int> column, level;          // M = theta_level * M_column
  std::vector<std::vector<int>> columns;  // columns[alpha][level]

  int generator(int alpha) const { return columns[alpha][0]; }
};

std::vector<AlgReal> dimproj(const FoldingSpec& spec, const DimVec& d);
FoldedCategory build_folded_category(const FoldingSpec& spec);

struct FoldingTheoremReport {
  bool pass = true;
  bool part_a = true, part_b = true, part_c = true, rows_are_roots = true, unique_decomposition = true;
  int modules = 0;
  int unit_rows = 0;
  std::vector<int> level_counts;
  std::vector<std::string> notes;
};

FoldingTheoremReport verify_folding_theorem(const FoldedCategory& fc);

// tau^m I(i) for all m where it exists
std::vector<int> tau_orbit_of_injective(const ARQuiver& ar, int i);

using IsoMultiset = std::map<int, long>;
IsoMultiset semiring_act(const FoldedCategory& fc, const ChebElem& r, int M);
IsoMultiset semiring_act(const FoldedCategory& fc, const ChebElem& r, const IsoMultiset& X);

std::vector<int> minimal_generators(const FoldedCategory& fc);

struct ReducedArrow {
  int from, to;  // indices of modules (generators)
  ChebElem r1, r2;
};

struct ReducedARQuiver {
  std::vector<int> vertices;
  std::vector<ReducedArrow> arrows;
  std::vector<std::pair<int, int>> tau;  // (M, tau M)
};

ReducedARQuiver reduced_ar_quiver(const FoldedCategory& fc);

// Sigma^k M
struct DerObj {
  int shift = 0;
  int mod = -1;
  friend bool operator==(const DerObj& a, const DerObj& b) { return a.shift == b.shift && a.mod == b.mod; }
  friend bool operator<(const DerObj& a, const DerObj& b) {
    return a.shift != b.shift ? a.shift < b.shift : a.mod < b.mod;
  }
};

std::vector<DerObj> derived_objects(const ARQuiver& ar, int kmin, int kmax);
ZVec derdim(const FoldedCategory& fc, const DerObj& x);
DerObj tau_D(const ARQuiver& ar, const DerObj& x);
DerObj tau_D_inv(const ARQuiver& ar, const DerObj& x);
int derived_hom(const ARQuiver& ar, const DerObj& x, const DerObj& y);

}  // namespace cf
