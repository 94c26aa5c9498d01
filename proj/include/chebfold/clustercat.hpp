#pragma once

#include <map>
#include <string>
#include <vector>

#include "chebfold/repcat.hpp"
#include "chebfold/tropical.hpp"

namespace cf {

// indecomposable of the cluster category: a module, or Sigma P(i)
struct ClusterInd {
  bool shifted = false;
  int index = -1;  // module index, or vertex i for Sigma P(i)
  friend bool operator==(const ClusterInd& a, const ClusterInd& b) {
    return a.shifted == b.shifted && a.index == b.index;
  }
  friend bool operator<(const ClusterInd& a, const ClusterInd& b) {
    return a.shifted != b.shifted ? a.shifted < b.shifted : a.index < b.index;
  }
};

class ClusterCategory {
 public:
  explicit ClusterCategory(const FoldingSpec& spec);

  const FoldedCategory& folded() const { return fc_; }
  const ARQuiver& ar() const { return fc_.ar; }
  const FoldingSpec& spec() const { return fc_.spec; }

  // objects are numbered: modules first, then Sigma P(0..N-1)
  int size() const { return static_cast<int>(objs_.size()); }
  const ClusterInd& obj(int x) const { return objs_[x]; }
  int id(const ClusterInd& c) const;
  std::string name(int x) const;

  // Hom_C(X, Y) as an orbit sum of derived Homs
  int hom(int x, int y) const;
  // dim Hom_C(X, tau Y) = dim Ext^1_C(X, Y)
  int ext(int x, int y) const { return ext_[x][y]; }
  // closed form from module Hom/Ext, used as a cross-check
  int ext_closed_form(int x, int y) const;

  // Gamma: module generators and Sigma P(u) with vw(u) = 1
  const std::vector<int>& generators() const { return gamma_; }
  // I_X for a generator X, ordered by level
  const std::vector<int>& generated(int x) const { return gen_.at(x); }

  bool is_rigid(const std::vector<int>& objects) const;
  bool is_Rplus_rigid(const std::vector<int>& gens) const;

  // g-vector over Q_0 of g and its projection over Q_0 of g'
  std::vector<Int> g_vector(int x) const;
  std::vector<AlgReal> g_vector_folded(int x) const;

 private:
  DerObj as_derived(int x) const;
  FoldedCategory fc_;
  std::vector<ClusterInd> objs_;
  std::vector<std::vector<int>> ext_;
  std::vector<int> gamma_;
  std::map<int, std::vector<int>> gen_;
};

struct TiltingObject {
  std::vector<int> summands;  // generators, position a belongs to folded vertex a
};

struct TiltingEnumeration {
  std::vector<std::vector<int>> objects;  // sorted generator sets
  bool all_length_ok = true;              // every maximal rigid set has |Q0'| summands
  bool hats_ok = true;                    // hats are basic tilting with |Q0| summands
  bool complements_ok = true;             // every almost complete object has two complements
  int almost_complete = 0;
  bool partition_ok = true;  // I-sets disjoint, |Q0| = |I_M| |Q0'|
  std::vector<std::string> notes;
};

TiltingEnumeration enumerate_Rplus_tilting(const ClusterCategory& cc);

// generators completing an almost complete object
std::vector<int> complements(const ClusterCategory& cc, const std::vector<int>& almost);

// hat(T): union of I-sets
std::vector<int> hat(const ClusterCategory& cc, const std::vector<int>& T);

// G_T-hat with column a*n + level for summand a, and d_F of it
IntMat tilting_G_matrix(const ClusterCategory& cc, const TiltingObject& T);
ZMat tilting_G_folded(const ClusterCategory& cc, const TiltingObject& T);

TiltingObject initial_tilting(const ClusterCategory& cc);
// replace summand k by the other complement
TiltingObject mutate_tilting(const ClusterCategory& cc, const TiltingObject& T, int k);

struct ExchangeWalkReport {
  int objects = 0;
  int edges = 0;
  bool connected = true;
  bool regular = true;
  bool path_independent = true;
  bool g_matches_tropical = true;  // G'_T equals the tropical G' along the same word
  bool g_scaling = true;           // g'(theta_j X) = sigma(theta_j) g'(X)
  bool dF_identity = true;         // d_F(G_hat) = G'_T
  bool folded_is_q_or_qop = true;  // checked for I types only
  int b_sign = 0;                  // +1: tropical walk on B, -1: on -B
  std::vector<std::vector<int>> edge_list;  // pairs of object ids
  std::vector<ZMat> folded_G;       // per object, labelled by the walk
  std::vector<ZMat> folded_B;
  std::vector<std::vector<int>> words;
  std::vector<std::string> notes;
  bool pass() const {
    return connected && regular && path_independent && g_matches_tropical && g_scaling && dF_identity &&
           folded_is_q_or_qop;
  }
};

// BFS over single-summand mutations from the initial projective object
ExchangeWalkReport exchange_walk(const ClusterCategory& cc, const TiltingEnumeration& en);

}  // namespace cf
