#include "chebfold/rootsys.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace cf {

CoxeterType CoxeterType::I2(int m) {
  if (m < 3) throw std::invalid_argument("I2(m) needs m >= 3");
  CoxeterType t;
  t.name = "I2(" + std::to_string(m) + ")";
  t.m = m;
  t.labels = {{1, m}, {m, 1}};
  return t;
}

static CoxeterType linear(const std::string& name, int rank, int last, int m) {
  CoxeterType t;
  t.name = name;
  t.m = m;
  t.labels.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) t.labels[i][i] = 1;
  for (int i = 0; i + 1 < rank; ++i) {
    int l = i + 2 == rank ? last : 3;
    t.labels[i][i + 1] = t.labels[i + 1][i] = l;
  }
  return t;
}

CoxeterType CoxeterType::H(int rank) {
  if (rank != 3 && rank != 4) throw std::invalid_argument("H type needs rank 3 or 4");
  return linear("H" + std::to_string(rank), rank, 5, 5);
}

CoxeterType CoxeterType::from_name(const std::string& name, int p) {
  if (name == "I2") return I2(p);
  if (name == "H3") return H(3);
  if (name == "H4") return H(4);
  if (name == "A") return linear("A" + std::to_string(p), p, 3, 3);
  if (name == "D" || name == "E") {
    // branch vertex 2 with arms; D_p: arms 1,1,p-3 ; E_p: arms 1,2,p-4
    CoxeterType t;
    t.name = name + std::to_string(p);
    t.m = 3;
    t.labels.assign(p, std::vector<int>(p, 2));
    for (int i = 0; i < p; ++i) t.labels[i][i] = 1;
    auto edge = [&](int a, int b) { t.labels[a][b] = t.labels[b][a] = 3; };
    if (name == "D") {
      if (p < 4) throw std::invalid_argument("D_p needs p >= 4");
      edge(0, 2);
      edge(1, 2);
      for (int i = 2; i + 1 < p; ++i) edge(i, i + 1);
    } else {
      if (p < 6 || p > 8) throw std::invalid_argument("E_p needs 6 <= p <= 8");
      edge(0, 3);
      edge(1, 2);
      edge(2, 3);
      for (int i = 3; i + 1 < p; ++i) edge(i, i + 1);
    }
    return t;
  }
  throw std::invalid_argument("unknown Coxeter type " + name);
}

static AlgReal cartan(const CoxeterType& t, int i, int j) {
  int l = t.labels[i][j];
  if (i == j) return AlgReal(t.m, 2L);
  if (l == 2) return AlgReal(t.m, 0L);
  if (l == 3) return AlgReal(t.m, -1L);
  if (l == t.m) return -AlgReal::gen(t.m);
  throw std::invalid_argument("Coxeter label outside {2,3,m}");
}

ZVec reflect(const CoxeterType& t, const ZVec& v, int i) {
  AlgReal c(t.m, 0L);
  for (int j = 0; j < t.rank(); ++j)
    if (!v[j].is_zero()) c += cartan(t, i, j) * v[j];
  ZVec r = v;
  r[i] -= c;
  return r;
}

bool sign_coherent(const ZVec& v) {
  bool pos = false, neg = false;
  for (const auto& x : v) {
    int s = x.sign();
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  return !(pos && neg);
}

RootSet generate_roots(const CoxeterType& t) {
  RootSet rs;
  rs.type = t;
  int r = t.rank();
  std::deque<ZVec> q;
  for (int i = 0; i < r; ++i) {
    ZVec e(r, AlgReal(t.m, 0L));
    e[i] = AlgReal(t.m, 1L);
    if (rs.lookup.insert(e).second) q.push_back(e);
  }
  while (!q.empty()) {
    ZVec v = q.front();
    q.pop_front();
    rs.roots.push_back(v);
    for (int i = 0; i < r; ++i) {
      ZVec w = reflect(t, v, i);
      if (rs.lookup.insert(w).second) q.push_back(w);
    }
    if (rs.roots.size() > 100000) throw std::runtime_error("root closure does not terminate");
  }
  for (const auto& v : rs.roots) {
    bool pos = true;
    for (const auto& x : v)
      if (x.sign() < 0) pos = false;
    if (pos) rs.positive.push_back(v);
  }
  return rs;
}

bool RootSet::is_root(const ZVec& v) const {
  if (static_cast<int>(v.size()) != type.rank()) throw std::invalid_argument("root dimension mismatch");
  return lookup.count(v) > 0;
}

bool RootSet::is_positive_root(const ZVec& v) const {
  if (!is_root(v)) return false;
  for (const auto& x : v)
    if (x.sign() < 0) return false;
  return true;
}

int RootSet::index_of_positive(const ZVec& v) const {
  for (size_t i = 0; i < positive.size(); ++i)
    if (positive[i] == v) return static_cast<int>(i);
  return -1;
}

std::pair<long double, long double> e_F(const ZVec& v, int n) {
  if (v.size() != 2) throw std::invalid_argument("e_F needs a 2-vector");
  long double th = std::numbers::pi_v<long double> / (2 * n + 1);
  long double a = v[0].to_long_double(), b = v[1].to_long_double();
  return {a + b * std::cos(2 * n * th), b * std::sin(2 * n * th)};
}

}  // namespace cf
