#include "chebfold/repcat.hpp"

#include "chebfold/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cf {

Quiver Quiver::from_matrix(const IntMat& S, const std::vector<std::string>& labels) {
  Quiver q;
  q.n = S.rows;
  for (int i = 0; i < S.rows; ++i)
    for (int j = 0; j < S.cols; ++j) {
      if (S(i, j) > 1) throw std::invalid_argument("multiple arrows are not supported");
      if (S(i, j) == 1) q.arrows.push_back({i, j});
    }
  q.labels = labels;
  if (q.labels.empty())
    for (int i = 0; i < q.n; ++i) q.labels.push_back(std::to_string(i));
  return q;
}

Quiver Quiver::opposite() const {
  Quiver q = *this;
  for (auto& a : q.arrows) std::swap(a.first, a.second);
  return q;
}

std::vector<std::vector<int>> Quiver::path_counts() const {
  // acyclic: count by repeated relaxation over a topological order
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : arrows) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> order;
  std::vector<int> deg = indeg;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) order.push_back(i);
  for (size_t k = 0; k < order.size(); ++k)
    for (int b : out[order[k]])
      if (--deg[b] == 0) order.push_back(b);
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("quiver has an oriented cycle");
  std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    p[i][i] = 1;
    for (int v : order)
      for (int b : out[v]) p[i][b] += p[i][v];
  }
  return p;
}

Quiver dynkin_quiver(const std::string& type, int p) {
  auto t = CoxeterType::from_name(type, p);
  int n = t.rank();
  std::vector<int> color(n, -1);
  color[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && t.labels[i][j] == 3 && color[i] >= 0 && color[j] < 0) {
          color[j] = 1 - color[i];
          changed = true;
        }
  }
  Quiver q;
  q.n = n;
  for (int i = 0; i < n; ++i) {
    q.labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (i != j && t.labels[i][j] == 3 && color[i] == 0) q.arrows.push_back({i, j});
  }
  return q;
}

long euler_form(const Quiver& q, const DimVec& d, const DimVec& e) {
  long s = 0;
  for (int i = 0; i < q.n; ++i) s += static_cast<long>(d[i]) * e[i];
  for (auto [a, b] : q.arrows) s -= static_cast<long>(d[a]) * e[b];
  return s;
}

int ARQuiver::find(const DimVec& d) const {
  for (int i = 0; i < size(); ++i)
    if (mods[i].dim == d) return i;
  return -1;
}

int ARQuiver::ext_dim(int M, int N) const {
  int t = mods[M].tau;
  if (t < 0) return 0;
  return hom[N][t];
}

ARQuiver knit_ar_quiver(const Quiver& q) {
  ARQuiver ar;
  ar.q = q;
  int n = q.n;
  auto paths = q.path_counts();
  // heights: h(target) = h(source) - 1
  std::vector<int> h(n, 0);
  std::vector<bool> seen(n, false);
  if (n > 0) {
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [a, b] : q.arrows) {
        if (a == v && !seen[b]) {
          h[b] = h[a] - 1;
          seen[b] = true;
          stack.push_back(b);
        } else if (b == v && !seen[a]) {
          h[a] = h[b] + 1;
          seen[a] = true;
          stack.push_back(a);
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (!seen[i]) throw std::invalid_argument("quiver is not connected");
    for (auto [a, b] : q.arrows)
      if (h[a] != h[b] + 1) throw std::invalid_argument("quiver is not a tree orientation");
    int mn = *std::min_element(h.begin(), h.end());
    for (auto& x : h) x -= mn;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h[a] < h[b]; });

  std::vector<DimVec> pdim(n, DimVec(n)), idim(n, DimVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pdim[i][j] = paths[i][j];
      idim[i][j] = paths[j][i];
    }
  auto inj_vertex = [&](const DimVec& d) {
    for (int k = 0; k < n; ++k)
      if (idim[k] == d) return k;
    return -1;
  };

  std::vector<int> prev(n, -1), cur(n, -1);
  ar.proj.assign(n, -1);
  ar.inj.assign(n, -1);
  ar.simple.assign(n, -1);
  auto add = [&](int i, int t, DimVec d) {
    IndecClass M;
    M.dim = std::move(d);
    M.vertex = i;
    M.t = t;
    M.col = 2 * t + h[i];
    int idx = ar.size();
    M.inj_of = inj_vertex(M.dim);
    if (M.inj_of >= 0) ar.inj[M.inj_of] = idx;
    ar.mods.push_back(M);
    ar.preds.emplace_back();
    ar.succs.emplace_back();
    return idx;
  };
  auto link = [&](int a, int b) {
    ar.arrows.push_back({a, b});
    ar.succs[a].push_back(b);
    ar.preds[b].push_back(a);
  };
  const int limit = 4 * n * n + 16;
  for (int t = 0; t < limit; ++t) {
    std::fill(cur.begin(), cur.end(), -1);
    bool any = false;
    for (int i : order) {
      DimVec d(n, 0);
      if (t == 0) {
        d = pdim[i];
      } else {
        int p = prev[i];
        if (p < 0 || ar.mods[p].inj_of >= 0) continue;
        for (auto [a, b] : q.arrows) {
          if (b == i && prev[a] >= 0)
            for (int j = 0; j < n; ++j) d[j] += ar.mods[prev[a]].dim[j];
          if (a == i && cur[b] >= 0)
            for (int j = 0; j < n; ++j) d[j] += ar.mods[cur[b]].dim[j];
        }
        for (int j = 0; j < n; ++j) d[j] -= ar.mods[p].dim[j];
        bool ok = false;
        for (int j = 0; j < n; ++j) {
          if (d[j] < 0) throw std::logic_error("knitting produced a negative dimension");
          if (d[j] > 0) ok = true;
        }
        if (!ok) throw std::logic_error("knitting produced a zero module");
      }
      int idx = add(i, t, d);
      if (t == 0) {
        ar.mods[idx].proj_of = i;
        ar.proj[i] = idx;
      } else {
        ar.mods[idx].tau = prev[i];
        ar.mods[prev[i]].tau_inv = idx;
      }
      cur[i] = idx;
      any = true;
      // arrows into (i,t): (j,t) for i->j, and (k,t-1) for k->i
      for (auto [a, b] : q.arrows) {
        if (a == i && cur[b] >= 0) link(cur[b], idx);
        if (b == i && t > 0 && prev[a] >= 0) link(prev[a], idx);
      }
    }
    if (!any) break;
    prev = cur;
  }
  for (int i = 0; i < n; ++i) {
    if (ar.inj[i] < 0) throw std::logic_error("injective module missing after knitting");
    DimVec e(n, 0);
    e[i] = 1;
    ar.simple[i] = ar.find(e);
  }
  // hammocks
  int N = ar.size();
  ar.hom.assign(N, std::vector<int>(N, 0));
  for (int M = 0; M < N; ++M) {
    auto& h_ = ar.hom[M];
    for (int Z = M; Z < N; ++Z) {
      long v = Z == M ? 1 : 0;
      for (int Y : ar.preds[Z]) v += h_[Y];
      if (ar.mods[Z].tau >= 0) v -= h_[ar.mods[Z].tau];
      if (v < 0) throw std::logic_error("negative hammock value");
      h_[Z] = static_cast<int>(v);
    }
  }
  return ar;
}

std::vector<AlgReal> dimproj(const FoldingSpec& spec, const DimVec& d) { return dF(spec, d); }

FoldedCategory build_folded_category(const FoldingSpec& spec) {
  if (spec.cheb_n <= 0) throw std::invalid_argument("folding has no Chebyshev block structure");
  FoldedCategory fc;
  fc.spec = spec;
  fc.n = spec.cheb_n;
  fc.ar = knit_ar_quiver(Quiver::from_matrix(spec.S, spec.labels));
  fc.roots = generate_roots(folded_coxeter_type(spec));
  std::map<ZVec, std::pair<int, int>> key;
  for (int a = 0; a < static_cast<int>(fc.roots.positive.size()); ++a)
    for (int j = 0; j < fc.n; ++j) {
      AlgReal s = sigma(ChebElem::theta(fc.n, j));
      ZVec v = fc.roots.positive[a];
      for (auto& x : v) x = x * s;
      key.emplace(v, std::make_pair(j, a));
    }
  int N = fc.ar.size();
  fc.column.assign(N, -1);
  fc.level.assign(N, -1);
  fc.columns.assign(fc.roots.positive.size(), std::vector<int>(fc.n, -1));
  for (int M = 0; M < N; ++M) {
    fc.proj_dims.push_back(dimproj(spec, fc.ar.mods[M].dim));
    auto it = key.find(fc.proj_dims.back());
    if (it == key.end()) continue;
    auto [j, a] = it->second;
    fc.level[M] = j;
    fc.column[M] = a;
    if (fc.columns[a][j] == -1) fc.columns[a][j] = M;
    else fc.columns[a][j] = -2;  // duplicate, flagged by the verifier
  }
  return fc;
}

std::vector<int> tau_orbit_of_injective(const ARQuiver& ar, int i) {
  std::vector<int> out;
  for (int M = ar.inj.at(i); M >= 0; M = ar.mods[M].tau) out.push_back(M);
  return out;
}

FoldingTheoremReport verify_folding_theorem(const FoldedCategory& fc) {
  FoldingTheoremReport rep;
  const auto& spec = fc.spec;
  int N = fc.ar.size();
  rep.modules = N;
  // uniqueness of sigma(theta_j) alpha
  std::set<ZVec> seen;
  for (const auto& a : fc.roots.positive)
    for (int j = 0; j < fc.n; ++j) {
      AlgReal s = sigma(ChebElem::theta(fc.n, j));
      ZVec v = a;
      for (auto& x : v) x = x * s;
      if (!seen.insert(v).second) {
        rep.unique_decomposition = false;
        rep.notes.push_back("sigma(theta_j) alpha is not unique");
      }
    }
  rep.level_counts.assign(fc.n, 0);
  for (int M = 0; M < N; ++M) {
    if (fc.level[M] < 0) {
      rep.part_c = false;
      rep.notes.push_back("module " + std::to_string(M) + " has no decomposition sigma(theta_j) alpha");
    } else {
      ++rep.level_counts[fc.level[M]];
    }
  }
  for (const auto& col : fc.columns)
    for (int x : col)
      if (x < 0) {
        rep.part_c = false;
        rep.notes.push_back("column with a missing or repeated level");
      }
  // (a) and the root bijection
  std::vector<int> hits(fc.roots.positive.size(), 0);
  for (int i = 0; i < spec.size(); ++i) {
    if (spec.vw[i] != spec.one()) continue;
    for (int M : tau_orbit_of_injective(fc.ar, i)) {
      ++rep.unit_rows;
      int a = fc.roots.index_of_positive(fc.proj_dims[M]);
      if (a < 0) {
        rep.part_a = false;
        rep.notes.push_back("row module " + std::to_string(M) + " does not project to a positive root");
      } else {
        ++hits[a];
      }
    }
  }
  for (int h : hits)
    if (h != 1) rep.rows_are_roots = false;
  // (b)
  for (int i = 0; i < spec.size(); ++i)
    for (int j = 0; j < spec.size(); ++j) {
      if (i == j || spec.F[i] != spec.F[j]) continue;
      auto oi = tau_orbit_of_injective(fc.ar, i), oj = tau_orbit_of_injective(fc.ar, j);
      size_t len = std::max(oi.size(), oj.size());
      for (size_t mm = 0; mm < len; ++mm) {
        ZVec pi = mm < oi.size() ? fc.proj_dims[oi[mm]] : ZVec(spec.folded_size(), spec.zero());
        ZVec pj = mm < oj.size() ? fc.proj_dims[oj[mm]] : ZVec(spec.folded_size(), spec.zero());
        for (int c = 0; c < spec.folded_size(); ++c)
          if (spec.vw[j] * pi[c] != spec.vw[i] * pj[c]) {
            rep.part_b = false;
            rep.notes.push_back("identity (b) fails for vertices " + spec.labels[i] + ", " + spec.labels[j] +
                                " at tau power " + std::to_string(mm));
            c = spec.folded_size();
          }
      }
    }
  rep.pass = rep.part_a && rep.part_b && rep.part_c && rep.rows_are_roots && rep.unique_decomposition;
  return rep;
}

IsoMultiset semiring_act(const FoldedCategory& fc, const ChebElem& r, int M) {
  if (!r.in_semiring()) throw std::invalid_argument("semiring action needs nonnegative coefficients");
  if (r.n() != fc.n) throw std::invalid_argument("Chebyshev rank mismatch");
  int a = fc.column.at(M), l = fc.level.at(M);
  if (a < 0) throw std::logic_error("module outside the column decomposition");
  ChebElem p = r * ChebElem::theta(fc.n, l);
  IsoMultiset out;
  for (int k = 0; k < fc.n; ++k)
    if (p[k] != 0) out[fc.columns[a][k]] += p[k].get_si();
  return out;
}

IsoMultiset semiring_act(const FoldedCategory& fc, const ChebElem& r, const IsoMultiset& X) {
  IsoMultiset out;
  for (auto [M, mult] : X)
    for (auto [N, c] : semiring_act(fc, r, M)) out[N] += mult * c;
  return out;
}

std::vector<int> minimal_generators(const FoldedCategory& fc) {
  std::vector<int> g;
  for (int M = 0; M < fc.ar.size(); ++M)
    if (fc.level[M] == 0) g.push_back(M);
  return g;
}

ReducedARQuiver reduced_ar_quiver(const FoldedCategory& fc) {
  ReducedARQuiver rq;
  rq.vertices = minimal_generators(fc);
  for (int M : rq.vertices)
    for (int N : rq.vertices) {
      ChebElem r1(fc.n), r2(fc.n);
      for (int X : fc.ar.preds[N])
        if (fc.column[X] == fc.column[M]) r1 += ChebElem::theta(fc.n, fc.level[X]);
      for (int Y : fc.ar.succs[M])
        if (fc.column[Y] == fc.column[N]) r2 += ChebElem::theta(fc.n, fc.level[Y]);
      if (!r1.is_zero() || !r2.is_zero()) rq.arrows.push_back({M, N, r1, r2});
    }
  for (int M : rq.vertices)
    if (fc.ar.mods[M].tau >= 0) rq.tau.push_back({M, fc.ar.mods[M].tau});
  return rq;
}

std::vector<DerObj> derived_objects(const ARQuiver& ar, int kmin, int kmax) {
  std::vector<DerObj> out;
  for (int k = kmin; k <= kmax; ++k)
    for (int M = 0; M < ar.size(); ++M) out.push_back({k, M});
  return out;
}

ZVec derdim(const FoldedCategory& fc, const DerObj& x) {
  ZVec v = fc.proj_dims.at(x.mod);
  if (x.shift % 2 != 0)
    for (auto& e : v) e = -e;
  return v;
}

DerObj tau_D(const ARQuiver& ar, const DerObj& x) {
  const auto& M = ar.mods.at(x.mod);
  if (M.tau >= 0) return {x.shift, M.tau};
  return {x.shift - 1, ar.inj[M.proj_of]};
}

DerObj tau_D_inv(const ARQuiver& ar, const DerObj& x) {
  const auto& M = ar.mods.at(x.mod);
  if (M.tau_inv >= 0) return {x.shift, M.tau_inv};
  return {x.shift + 1, ar.proj[M.inj_of]};
}

int derived_hom(const ARQuiver& ar, const DerObj& x, const DerObj& y) {
  if (y.shift == x.shift) return ar.hom_dim(x.mod, y.mod);
  if (y.shift == x.shift + 1) return ar.ext_dim(x.mod, y.mod);
  return 0;
}

}  // namespace cf
