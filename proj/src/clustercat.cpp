#include "chebfold/clustercat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace cf {

namespace {

constexpr int kOrbitRange = 4;

DerObj apply_F(const ARQuiver& ar, DerObj d) { return tau_D_inv(ar, {d.shift + 1, d.mod}); }

DerObj apply_F_inv(const ARQuiver& ar, DerObj d) {
  DerObj t = tau_D(ar, d);
  return {t.shift - 1, t.mod};
}

int orbit_hom(const ARQuiver& ar, const DerObj& x, const DerObj& y) {
  int s = derived_hom(ar, x, y);
  DerObj up = y, down = y;
  for (int i = 1; i <= kOrbitRange; ++i) {
    up = apply_F(ar, up);
    down = apply_F_inv(ar, down);
    s += derived_hom(ar, x, up) + derived_hom(ar, x, down);
  }
  return s;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ClusterCategory::ClusterCategory(const FoldingSpec& spec) : fc_(build_folded_category(spec)) {
  const auto& ar = fc_.ar;
  int M = ar.size(), N = spec.size();
  for (int i = 0; i < M; ++i) objs_.push_back({false, i});
  for (int i = 0; i < N; ++i) objs_.push_back({true, i});
  int T = size();
  ext_.assign(T, std::vector<int>(T, 0));
  parallel_for(T, [&](size_t x) {
    for (int y = 0; y < T; ++y) {
      DerObj dy = as_derived(y);
      ext_[x][y] = orbit_hom(ar, as_derived(static_cast<int>(x)), {dy.shift + 1, dy.mod});
    }
  });
  for (int m = 0; m < M; ++m)
    if (fc_.level[m] == 0) {
      gamma_.push_back(m);
      gen_[m] = fc_.columns[fc_.column[m]];
    }
  for (int u = 0; u < N; ++u) {
    if (spec.vw[u] != spec.one()) continue;
    int x = M + u;
    gamma_.push_back(x);
    const auto& col = fc_.columns[fc_.column[ar.proj[u]]];
    std::vector<int> members;
    for (int p : col) {
      int v = ar.mods[p].proj_of;
      if (v < 0) throw std::logic_error("column of a projective contains a non-projective");
      members.push_back(M + v);
    }
    gen_[x] = members;
  }
}

DerObj ClusterCategory::as_derived(int x) const {
  const auto& c = objs_.at(x);
  if (!c.shifted) return {0, c.index};
  return {1, fc_.ar.proj[c.index]};
}

int ClusterCategory::id(const ClusterInd& c) const {
  return c.shifted ? fc_.ar.size() + c.index : c.index;
}

std::string ClusterCategory::name(int x) const {
  const auto& c = objs_.at(x);
  const auto& labels = fc_.spec.labels;
  if (c.shifted) return "SP(" + labels[c.index] + ")";
  const auto& m = fc_.ar.mods[c.index];
  return "M(" + labels[m.vertex] + "," + std::to_string(m.t) + ")";
}

int ClusterCategory::hom(int x, int y) const { return orbit_hom(fc_.ar, as_derived(x), as_derived(y)); }

int ClusterCategory::ext_closed_form(int x, int y) const {
  const auto& a = objs_.at(x);
  const auto& b = objs_.at(y);
  const auto& ar = fc_.ar;
  if (a.shifted && b.shifted) return 0;
  if (!a.shifted && !b.shifted) return ar.ext_dim(a.index, b.index) + ar.ext_dim(b.index, a.index);
  const auto& mod = a.shifted ? b : a;
  const auto& sp = a.shifted ? a : b;
  return ar.mods[mod.index].dim[sp.index];
}

bool ClusterCategory::is_rigid(const std::vector<int>& objects) const {
  for (int x : objects)
    for (int y : objects)
      if (ext_[x][y] != 0) return false;
  return true;
}

bool ClusterCategory::is_Rplus_rigid(const std::vector<int>& gens) const {
  std::vector<int> all;
  for (int g : gens) {
    const auto& s = generated(g);
    all.insert(all.end(), s.begin(), s.end());
  }
  return is_rigid(all);
}

std::vector<Int> ClusterCategory::g_vector(int x) const {
  const auto& c = objs_.at(x);
  const auto& ar = fc_.ar;
  int n = ar.q.n;
  std::vector<Int> g(n, 0);
  if (c.shifted) {
    g[c.index] = -1;
    return g;
  }
  const auto& dim = ar.mods[c.index].dim;
  std::vector<long> top(n), d1(n, 0);
  for (int i = 0; i < n; ++i) top[i] = ar.hom_dim(c.index, ar.simple[i]);
  for (int i = 0; i < n; ++i) {
    d1[i] -= dim[i];
    for (int u = 0; u < n; ++u) d1[i] += top[u] * ar.mods[ar.proj[u]].dim[i];
  }
  // Kahn order: every u with a path u -> i precedes i
  std::vector<int> indeg(n, 0), order;
  for (auto [a, b] : ar.q.arrows) ++indeg[b];
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (size_t k = 0; k < order.size(); ++k)
    for (auto [a, b] : ar.q.arrows)
      if (a == order[k] && --indeg[b] == 0) order.push_back(b);
  std::vector<long> c1(n, 0);
  for (size_t k = 0; k < order.size(); ++k) {
    int i = order[k];
    long v = d1[i];
    for (size_t l = 0; l < k; ++l) v -= c1[order[l]] * ar.mods[ar.proj[order[l]]].dim[i];
    if (v < 0) throw std::logic_error("negative multiplicity in a projective presentation");
    c1[i] = v;
  }
  for (int i = 0; i < n; ++i) g[i] = top[i] - c1[i];
  return g;
}

std::vector<AlgReal> ClusterCategory::g_vector_folded(int x) const { return dF(fc_.spec, g_vector(x)); }

std::vector<int> hat(const ClusterCategory& cc, const std::vector<int>& T) {
  std::vector<int> all;
  for (int g : T) {
    const auto& s = cc.generated(g);
    all.insert(all.end(), s.begin(), s.end());
  }
  return sorted(all);
}

std::vector<int> complements(const ClusterCategory& cc, const std::vector<int>& almost) {
  if (!cc.is_Rplus_rigid(almost)) throw std::invalid_argument("object is not R+-rigid");
  std::vector<int> out;
  for (int x : cc.generators()) {
    if (std::find(almost.begin(), almost.end(), x) != almost.end()) continue;
    std::vector<int> t = almost;
    t.push_back(x);
    if (cc.is_Rplus_rigid(t)) out.push_back(x);
  }
  return out;
}

TiltingEnumeration enumerate_Rplus_tilting(const ClusterCategory& cc) {
  TiltingEnumeration en;
  const auto& spec = cc.spec();
  const auto& G = cc.generators();
  int r = spec.folded_size(), N = spec.size();
  int V = static_cast<int>(G.size());
  // I-sets partition the category
  std::vector<int> cover(cc.size(), 0);
  for (int g : G) {
    if (static_cast<int>(cc.generated(g).size()) * r != N) en.partition_ok = false;
    for (int x : cc.generated(g)) ++cover[x];
  }
  for (int c : cover)
    if (c != 1) en.partition_ok = false;
  if (!en.partition_ok) en.notes.push_back("I-sets do not partition the indecomposables");

  std::vector<bool> self(V);
  for (int a = 0; a < V; ++a) self[a] = cc.is_Rplus_rigid({G[a]});
  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
  parallel_for(V, [&](size_t a) {
    for (int b = 0; b < V; ++b)
      if (static_cast<int>(a) != b && self[a] && self[b]) adj[a][b] = cc.is_Rplus_rigid({G[a], G[b]});
  });
  // Bron-Kerbosch with pivot
  std::vector<std::vector<int>> cliques;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
          cliques.push_back(R);
          return;
        }
        int pivot = !P.empty() ? P[0] : X[0];
        size_t best = 0;
        for (int u : P) {
          size_t c = 0;
          for (int v : P) c += adj[u][v];
          if (c >= best) best = c, pivot = u;
        }
        std::vector<int> cand;
        for (int v : P)
          if (!adj[pivot][v]) cand.push_back(v);
        for (int v : cand) {
          std::vector<int> P2, X2;
          for (int w : P)
            if (adj[v][w]) P2.push_back(w);
          for (int w : X)
            if (adj[v][w]) X2.push_back(w);
          R.push_back(v);
          bk(R, P2, X2);
          R.pop_back();
          P.erase(std::find(P.begin(), P.end(), v));
          X.push_back(v);
        }
      };
  std::vector<int> R, P;
  for (int a = 0; a < V; ++a)
    if (self[a]) P.push_back(a);
  bk(R, P, {});
  for (auto& c : cliques) {
    std::vector<int> obj;
    for (int a : c) obj.push_back(G[a]);
    obj = sorted(obj);
    if (static_cast<int>(obj.size()) != r) {
      en.all_length_ok = false;
      en.notes.push_back("maximal R+-rigid object with " + std::to_string(obj.size()) + " summands");
    }
    auto h = hat(cc, obj);
    bool hat_ok = static_cast<int>(h.size()) == N && cc.is_rigid(h);
    for (int x = 0; x < cc.size() && hat_ok; ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      bool compatible = true;
      for (int y : h)
        if (cc.ext(x, y) || cc.ext(y, x)) compatible = false;
      if (compatible) hat_ok = false;
    }
    if (!hat_ok) {
      en.hats_ok = false;
      en.notes.push_back("hat object is not a basic tilting object");
    }
    en.objects.push_back(obj);
  }
  std::sort(en.objects.begin(), en.objects.end());
  std::set<std::vector<int>> almost;
  for (const auto& T : en.objects)
    for (int k = 0; k < static_cast<int>(T.size()); ++k) {
      std::vector<int> A = T;
      A.erase(A.begin() + k);
      almost.insert(A);
    }
  en.almost_complete = static_cast<int>(almost.size());
  for (const auto& A : almost) {
    auto c = complements(cc, A);
    if (c.size() != 2) {
      en.complements_ok = false;
      en.notes.push_back("almost complete object with " + std::to_string(c.size()) + " complements");
    }
  }
  return en;
}

IntMat tilting_G_matrix(const ClusterCategory& cc, const TiltingObject& T) {
  const auto& spec = cc.spec();
  int N = spec.size();
  IntMat G(N, N, Int(0));
  for (int a = 0; a < static_cast<int>(T.summands.size()); ++a) {
    const auto& members = cc.generated(T.summands[a]);
    for (int lvl = 0; lvl < static_cast<int>(members.size()); ++lvl) {
      int col = -1;
      for (int u : spec.blocks[a])
        if (spec.kappa[u] == lvl) col = u;
      if (col < 0) throw std::logic_error("block has no vertex at this level");
      auto g = cc.g_vector(members[lvl]);
      for (int i = 0; i < N; ++i) G(i, col) = g[i];
    }
  }
  return G;
}

ZMat tilting_G_folded(const ClusterCategory& cc, const TiltingObject& T) {
  const auto& spec = cc.spec();
  int r = spec.folded_size();
  ZMat G(r, r, spec.zero());
  for (int a = 0; a < r; ++a) {
    auto g = cc.g_vector_folded(T.summands[a]);
    for (int i = 0; i < r; ++i) G(i, a) = g[i];
  }
  return G;
}

TiltingObject initial_tilting(const ClusterCategory& cc) {
  const auto& spec = cc.spec();
  TiltingObject T;
  for (int a = 0; a < spec.folded_size(); ++a) {
    int p = cc.ar().proj[spec.unit_vertex(a)];
    if (cc.folded().level[p] != 0) throw std::logic_error("weight-1 projective is not a generator");
    T.summands.push_back(p);
  }
  return T;
}

TiltingObject mutate_tilting(const ClusterCategory& cc, const TiltingObject& T, int k) {
  if (k < 0 || k >= static_cast<int>(T.summands.size())) throw std::invalid_argument("summand index out of range");
  std::vector<int> A = T.summands;
  A.erase(A.begin() + k);
  auto c = complements(cc, A);
  if (c.size() != 2) throw std::runtime_error("almost complete object without exactly two complements");
  TiltingObject out = T;
  if (c[0] == T.summands[k]) out.summands[k] = c[1];
  else if (c[1] == T.summands[k]) out.summands[k] = c[0];
  else throw std::runtime_error("summand is not one of the complements");
  return out;
}

ExchangeWalkReport exchange_walk(const ClusterCategory& cc, const TiltingEnumeration& en) {
  ExchangeWalkReport rep;
  const auto& spec = cc.spec();
  int r = spec.folded_size();
  std::map<std::vector<int>, int> ids;
  std::vector<TiltingObject> objs;
  std::set<std::pair<int, int>> edges;
  std::vector<std::set<int>> nbrs;
  std::deque<int> q;
  auto add = [&](const TiltingObject& T, const ZMat& B, const std::vector<int>& w) {
    int id = static_cast<int>(objs.size());
    ids[sorted(T.summands)] = id;
    objs.push_back(T);
    rep.folded_B.push_back(B);
    rep.words.push_back(w);
    rep.folded_G.push_back(tilting_G_folded(cc, T));
    nbrs.emplace_back();
    q.push_back(id);
    return id;
  };
  add(initial_tilting(cc), spec.B, {});
  while (!q.empty()) {
    int id = q.front();
    q.pop_front();
    for (int k = 0; k < r; ++k) {
      TiltingObject T2 = mutate_tilting(cc, objs[id], k);
      ZMat B2 = mutate(rep.folded_B[id], k);
      auto key = sorted(T2.summands);
      auto it = ids.find(key);
      int to;
      if (it == ids.end()) {
        auto w = rep.words[id];
        w.push_back(k);
        to = add(T2, B2, w);
      } else {
        to = it->second;
        // same object reached again: compare folded B after matching positions
        const auto& old = objs[to].summands;
        std::vector<int> pos(r);
        for (int a = 0; a < r; ++a)
          pos[a] = static_cast<int>(std::find(old.begin(), old.end(), T2.summands[a]) - old.begin());
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b)
            if (B2(a, b) != rep.folded_B[to](pos[a], pos[b])) rep.path_independent = false;
      }
      nbrs[id].insert(to);
      edges.insert({std::min(id, to), std::max(id, to)});
    }
  }
  rep.objects = static_cast<int>(objs.size());
  rep.edges = static_cast<int>(edges.size());
  for (auto [a, b] : edges) rep.edge_list.push_back({a, b});
  rep.connected = rep.objects == static_cast<int>(en.objects.size());
  for (const auto& s : nbrs)
    if (static_cast<int>(s.size()) != r) rep.regular = false;
  if (!rep.connected) rep.notes.push_back("exchange graph does not reach every tilting object");
  if (!rep.path_independent) rep.notes.push_back("folded exchange matrix depends on the mutation path");

  // tropical comparison with both sign conventions
  for (int sign : {1, -1}) {
    ZMat B0 = spec.B;
    if (sign < 0)
      for (auto& x : B0.d) x = -x;
    bool all = true;
    for (int id = 0; id < rep.objects && all; ++id) {
      FSeed s = initial_seed(B0, spec.zero(), spec.one());
      for (int k : rep.words[id]) s = mutate_seed(s, k);
      if (g_matrix(s) != rep.folded_G[id]) all = false;
    }
    if (all) {
      rep.b_sign = sign;
      break;
    }
  }
  rep.g_matches_tropical = rep.b_sign != 0;
  if (!rep.g_matches_tropical) rep.notes.push_back("tilting G' differs from the tropical G' along the same word");

  for (int id = 0; id < rep.objects; ++id)
    if (matrix_dF(spec, tilting_G_matrix(cc, objs[id])) != rep.folded_G[id]) rep.dF_identity = false;
  for (int g : cc.generators()) {
    auto base = cc.g_vector_folded(g);
    const auto& members = cc.generated(g);
    for (int j = 0; j < static_cast<int>(members.size()); ++j) {
      AlgReal s = sigma(ChebElem::theta(cc.folded().n, j));
      auto v = cc.g_vector_folded(members[j]);
      for (int i = 0; i < r; ++i)
        if (v[i] != s * base[i]) rep.g_scaling = false;
    }
  }
  if (spec.name.rfind("I2", 0) == 0) {
    ZMat neg = spec.B;
    for (auto& x : neg.d) x = -x;
    for (const auto& B : rep.folded_B)
      if (B != spec.B && B != neg) rep.folded_is_q_or_qop = false;
  }
  return rep;
}

}  // namespace cf
