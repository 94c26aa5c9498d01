#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chebfold/chebring.hpp"

namespace cf {

using ZVec = std::vector<AlgReal>;

// Coxeter data with labels in {2, 3, m}; entries of the root vectors live in Z[2cos(pi/m)]
struct CoxeterType {
  std::string name;
  int m = 3;
  std::vector<std::vector<int>> labels;  // Coxeter matrix, diagonal 1

  static CoxeterType I2(int m);
  static CoxeterType H(int rank);  // H3, H4
  static CoxeterType from_name(const std::string& name, int param = 0);  // "I2", "H3", "H4", "A", "D", "E"
  int rank() const { return static_cast<int>(labels.size()); }
};

struct RootSet {
  CoxeterType type;
  std::vector<ZVec> roots;
  std::vector<ZVec> positive;
  std::set<ZVec> lookup;

  bool is_root(const ZVec& v) const;
  bool is_positive_root(const ZVec& v) const;
  int index_of_positive(const ZVec& v) const;
};

RootSet generate_roots(const CoxeterType& t);
ZVec reflect(const CoxeterType& t, const ZVec& v, int i);
bool sign_coherent(const ZVec& v);

// Euclidean realisation for I2(2n+1): e_F(1,0) = (1,0), e_F(0,1) = (cos 2n t, sin 2n t), t = pi/(2n+1)
std::pair<long double, long double> e_F(const ZVec& v, int n);

}  // namespace cf
