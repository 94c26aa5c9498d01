#include "chebfold/unfolding.hpp"

#include <functional>
#include <random>

#include "parallel.hpp"

namespace cf {

int FoldingSpec::unit_vertex(int b) const {
  for (int u : blocks.at(b))
    if (vw[u] == one()) return u;
  throw std::logic_error("block without a weight-1 vertex");
}

std::vector<int> FoldingSpec::lift(const std::vector<int>& word) const {
  std::vector<int> out;
  for (int k : word)
    for (int u : blocks.at(k)) out.push_back(u);
  return out;
}

ConditionReport check_conditions(const IntMat& S, const ZMat& B, const std::vector<std::vector<int>>& blocks,
                                 const std::vector<AlgReal>& w) {
  if (!S.square() || !B.square() || static_cast<int>(blocks.size()) != B.rows ||
      static_cast<int>(w.size()) != S.rows)
    throw std::invalid_argument("check_conditions: dimension mismatch");
  int m = B.rows ? B(0, 0).m() : 3;
  ConditionReport rep;
  for (int a = 0; a < B.rows; ++a)
    for (int b = 0; b < B.cols; ++b) {
      const AlgReal& bab = B(a, b);
      int sb = bab.sign();
      bool pos = false, neg = false;
      for (int j : blocks[b]) {
        // sum_i w_i s_ij / w_j == b_ab  <=>  sum_i w_i s_ij == b_ab w_j
        AlgReal lhs(m, 0L);
        for (int i : blocks[a]) {
          if (S(i, j) == 0) continue;
          lhs += AlgReal(m, S(i, j)) * w[i];
          if (S(i, j) > 0) pos = true;
          else neg = true;
        }
        AlgReal rhs = bab * w[j];
        if (lhs != rhs) {
          rep.pass = false;
          rep.failures.push_back({a, b, j, "sum", rhs.str(), lhs.str()});
        }
      }
      if (sb >= 0 && neg) {
        rep.pass = false;
        rep.failures.push_back({a, b, -1, "sign", ">=0", "negative entry"});
      }
      if (pos && neg) {
        rep.pass = false;
        rep.failures.push_back({a, b, -1, "mixed-sign", "one sign", "mixed"});
      }
    }
  return rep;
}

namespace {

Mat<QuadRat> to_quad(const ZMat& b) {
  // only used for integer (m = 3) folded matrices
  Mat<QuadRat> r(b.rows, b.cols);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      const auto& c = b(i, j).coeffs();
      if (c.size() != 1) throw std::logic_error("rescaled matrix must be integral");
      r(i, j) = QuadRat(0, mpq_class(c[0]));
    }
  return r;
}

struct Walker {
  const FoldingSpec& spec;
  UnfoldingReport& rep;

  bool check(const IntMat& S, const ZMat& B, const std::optional<Mat<QuadRat>>& Bq, const std::vector<int>& word) {
    ++rep.nodes;
    ConditionReport c = check_conditions(S, B, spec.blocks, spec.vw);
    if (!c.pass) {
      rep.pass = false;
      rep.failing_word = word;
      rep.failure = c;
      return false;
    }
    if (Bq && rescale(*Bq, spec.P) != to_quad(B)) {
      rep.pass = false;
      rep.failing_word = word;
      rep.error = "rescaling does not commute with mutation";
      return false;
    }
    return true;
  }

  bool dfs(const IntMat& S, const ZMat& B, const std::optional<Mat<QuadRat>>& Bq, std::vector<int>& word,
           int depth) {
    if (!check(S, B, Bq, word)) return false;
    ++rep.words;
    if (static_cast<int>(word.size()) == depth) return true;
    for (int k = 0; k < B.rows; ++k) {
      word.push_back(k);
      IntMat S2 = composite_mutate(S, spec.blocks[k]);
      ZMat B2 = mutate(B, k);
      std::optional<Mat<QuadRat>> Bq2;
      if (Bq) Bq2 = mutate(*Bq, k);
      bool ok = dfs(S2, B2, Bq2, word, depth);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool run_word(const std::vector<int>& w) {
    IntMat S = spec.S;
    ZMat B = spec.B;
    std::optional<Mat<QuadRat>> Bq = spec.Bq;
    std::vector<int> prefix;
    if (!check(S, B, Bq, prefix)) return false;
    for (int k : w) {
      prefix.push_back(k);
      S = composite_mutate(S, spec.blocks.at(k));
      B = mutate(B, k);
      if (Bq) Bq = mutate(*Bq, k);
      if (!check(S, B, Bq, prefix)) return false;
    }
    ++rep.words;
    return true;
  }
};

}  // namespace

UnfoldingReport check_weighted_unfolding(const FoldingSpec& spec, const std::vector<std::vector<int>>& words) {
  UnfoldingReport rep;
  Walker w{spec, rep};
  try {
    for (const auto& word : words)
      if (!w.run_word(word)) break;
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.error = e.what();
  }
  return rep;
}

UnfoldingReport check_weighted_unfolding(const FoldingSpec& spec, int depth, int random_words, int random_length,
                                         uint64_t seed) {
  UnfoldingReport rep;
  rep.depth = depth;
  rep.random_words = random_words;
  rep.random_length = random_length;
  rep.seed = seed;
  try {
    Walker w{spec, rep};
    std::vector<int> word;
    if (!w.dfs(spec.S, spec.B, spec.Bq, word, depth)) return rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, spec.folded_size() - 1);
    std::vector<std::vector<int>> words(random_words);
    for (auto& wd : words) {
      wd.resize(random_length);
      for (auto& x : wd) x = pick(rng);
    }
    std::vector<UnfoldingReport> parts(words.size());
    parallel_for(words.size(), [&](size_t i) { parts[i] = check_weighted_unfolding(spec, {words[i]}); });
    for (const auto& p : parts) {
      rep.nodes += p.nodes;
      rep.words += p.words;
      if (!p.pass && rep.pass) {
        rep.pass = false;
        rep.failing_word = p.failing_word;
        rep.failure = p.failure;
        rep.error = p.error;
      }
    }
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.error = e.what();
  }
  return rep;
}

// ------------------------------------------------------------ constructions

std::optional<ChebElem> lift_entry(const AlgReal& x, int n) {
  std::vector<ChebElem> cands = {ChebElem(n), ChebElem::constant(n, 1), ChebElem::constant(n, -1)};
  if (n >= 2) {
    cands.push_back(ChebElem::theta(n, 1));
    cands.push_back(-ChebElem::theta(n, 1));
  }
  for (const auto& c : cands)
    if (sigma(c) == x) return c;
  return std::nullopt;
}

IntMat build_unfolded_matrix(const ChebMat& Bc) {
  int r = Bc.rows;
  if (!Bc.square() || r == 0) throw std::invalid_argument("build_unfolded_matrix: need a nonempty square matrix");
  int n = Bc(0, 0).n();
  IntMat S(r * n, r * n);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const ChebElem& e = Bc(a, b);
      bool ok = e.is_zero() || e == ChebElem::constant(n, 1) || e == ChebElem::constant(n, -1) ||
                (n >= 2 && (e == ChebElem::theta(n, 1) || e == -ChebElem::theta(n, 1)));
      if (!ok) throw std::invalid_argument("entry " + e.str() + " does not lift to {0, +-1, +-theta_1}");
      auto rho = reg_rep(e);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S(a * n + i, b * n + j) = rho[i][j];
    }
  return S;
}

IntMat build_unfolded_matrix(const ZMat& B, int n) {
  ChebMat Bc(B.rows, B.cols, ChebElem(n));
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      auto e = lift_entry(B(i, j), n);
      if (!e) throw std::invalid_argument("entry " + B(i, j).str() + " does not lift to {0, +-1, +-theta_1}");
      Bc(i, j) = *e;
    }
  return build_unfolded_matrix(Bc);
}

std::vector<AlgReal> dF(const FoldingSpec& spec, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != spec.size()) throw std::invalid_argument("d_F: dimension mismatch");
  std::vector<AlgReal> r(spec.folded_size(), spec.zero());
  for (int u = 0; u < spec.size(); ++u)
    if (v[u] != 0) r[spec.F[u]] += AlgReal(spec.m, v[u]) * spec.vw[u];
  return r;
}

std::vector<AlgReal> dF(const FoldingSpec& spec, const std::vector<int>& v) {
  std::vector<Int> w(v.begin(), v.end());
  return dF(spec, w);
}

ZMat matrix_dF(const FoldingSpec& spec, const IntMat& X) {
  int r = spec.folded_size();
  ZMat out(r, r, spec.zero());
  for (int b = 0; b < r; ++b) {
    int u = spec.unit_vertex(b);
    std::vector<Int> col(X.rows);
    for (int i = 0; i < X.rows; ++i) col[i] = X(i, u);
    auto d = dF(spec, col);
    for (int a = 0; a < r; ++a) out(a, b) = d[a];
  }
  return out;
}

namespace {

void finish_blocks(FoldingSpec& s) {
  int r = 0;
  for (int f : s.F) r = std::max(r, f + 1);
  s.blocks.assign(r, {});
  for (int u = 0; u < static_cast<int>(s.F.size()); ++u) s.blocks[s.F[u]].push_back(u);
}

FoldingSpec h_type(int rank) {
  FoldingSpec s;
  s.m = 5;
  s.cheb_n = 2;
  int N = 2 * rank;
  s.S = IntMat(N, N);
  std::vector<std::pair<int, int>> arrows;
  if (rank == 3) {
    s.name = "H3";
    // 1->2, 2->phi3, phi1->phi2, phi2->3, phi2->phi3
    arrows = {{0, 2}, {2, 5}, {1, 3}, {3, 4}, {3, 5}};
  } else {
    s.name = "H4";
    // 1->2, 2->3, 3->phi4, phi1->phi2, phi2->phi3, phi3->4, phi3->phi4
    arrows = {{0, 2}, {2, 4}, {4, 7}, {1, 3}, {3, 5}, {5, 6}, {5, 7}};
  }
  for (auto [a, b] : arrows) {
    s.S(a, b) = 1;
    s.S(b, a) = -1;
  }
  AlgReal phi = AlgReal::gen(5);
  for (int u = 0; u < N; ++u) {
    s.F.push_back(u / 2);
    s.kappa.push_back(u % 2);
    s.vw.push_back(u % 2 ? phi : AlgReal(5, 1L));
    s.labels.push_back((u % 2 ? "phi" : "") + std::to_string(u / 2 + 1));
  }
  for (int b = 0; b < rank; ++b) s.folded_labels.push_back("[" + std::to_string(b + 1) + "]");
  s.B = ZMat(rank, rank, AlgReal(5, 0L));
  for (int b = 0; b + 1 < rank; ++b) {
    AlgReal w = b + 2 == rank ? phi : AlgReal(5, 1L);
    s.B(b, b + 1) = w;
    s.B(b + 1, b) = -w;
  }
  finish_blocks(s);
  return s;
}

FoldingSpec i_type(int n) {
  if (n < 2) throw std::invalid_argument("I2(2n+1) folding needs n >= 2");
  FoldingSpec s;
  s.name = "I2(" + std::to_string(2 * n + 1) + ")";
  s.m = 2 * n + 1;
  s.cheb_n = n;
  int N = 2 * n;
  // original path vertex for block b and Chebyshev index k
  auto orig = [&](int b, int k) {
    bool match = (k % 2) == b;
    return match ? k : 2 * n - 1 - k;
  };
  std::vector<int> o(N);
  for (int b = 0; b < 2; ++b)
    for (int k = 0; k < n; ++k) {
      int u = b * n + k;
      o[u] = orig(b, k);
      s.F.push_back(b);
      s.kappa.push_back(k);
      s.vw.push_back(sigma(ChebElem::theta(n, k)));
      s.labels.push_back(std::to_string(o[u]));
    }
  std::vector<int> inv(N);
  for (int u = 0; u < N; ++u) inv[o[u]] = u;
  s.S = IntMat(N, N);
  for (int i = 0; i + 1 < N; ++i) {
    int src = i % 2 == 0 ? i : i + 1, dst = i % 2 == 0 ? i + 1 : i;
    s.S(inv[src], inv[dst]) = 1;
    s.S(inv[dst], inv[src]) = -1;
  }
  s.folded_labels = {"[0]", "[1]"};
  AlgReal x = AlgReal::gen(s.m);
  s.B = ZMat(2, 2, AlgReal(s.m, 0L));
  s.B(0, 1) = x;
  s.B(1, 0) = -x;
  finish_blocks(s);
  return s;
}

FoldingSpec i_series(int k) {
  if (k < 2) throw std::invalid_argument("I2(k+1) unfolding needs k >= 2");
  FoldingSpec s;
  s.name = "I2(" + std::to_string(k + 1) + ")/A" + std::to_string(k);
  s.m = k + 1;
  s.S = IntMat(k, k);
  for (int i = 0; i + 1 < k; ++i) {
    int src = i % 2 == 1 ? i : i + 1, dst = i % 2 == 1 ? i + 1 : i;
    s.S(src, dst) = 1;
    s.S(dst, src) = -1;
  }
  AlgReal x = AlgReal::gen(s.m);
  for (int i = 0; i < k; ++i) {
    s.F.push_back(i % 2);
    s.kappa.push_back(-1);
    s.vw.push_back(AlgReal(s.m, cheb_v(i)));
    s.labels.push_back(std::to_string(i + 1));
  }
  s.folded_labels = {"E1", "E2"};
  s.B = ZMat(2, 2, AlgReal(s.m, 0L));
  s.B(0, 1) = -x;
  s.B(1, 0) = x;
  finish_blocks(s);
  return s;
}

FoldingSpec f4e6() {
  FoldingSpec s;
  s.name = "F4/E6";
  s.m = 3;
  s.S = int_mat({{0, -1, 0, 0, 0, 0},
                 {1, 0, -1, -1, 0, 0},
                 {0, 1, 0, 0, -1, 0},
                 {0, 1, 0, 0, 0, -1},
                 {0, 0, 1, 0, 0, 0},
                 {0, 0, 0, 1, 0, 0}});
  s.F = {0, 1, 2, 2, 3, 3};
  for (int u = 0; u < 6; ++u) {
    s.vw.push_back(AlgReal(3, 1L));
    s.kappa.push_back(-1);
    s.labels.push_back(std::to_string(u + 1));
  }
  s.folded_labels = {"1", "2", "3", "4"};
  IntMat bt = int_mat({{0, -1, 0, 0}, {1, 0, -1, 0}, {0, 2, 0, -1}, {0, 0, 1, 0}});
  s.B = ZMat(4, 4, AlgReal(3, 0L));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s.B(i, j) = AlgReal(3, bt(i, j));
  QuadRat r2 = QuadRat::root(2);
  QuadRat one(2, 1), zero(2, 0);
  Mat<QuadRat> bq(4, 4, zero);
  bq(0, 1) = -one;
  bq(1, 0) = one;
  bq(1, 2) = -r2;
  bq(2, 1) = r2;
  bq(2, 3) = -one;
  bq(3, 2) = one;
  s.Bq = bq;
  QuadRat half_r2(2, 0, mpq_class(1, 2));
  s.P = {one, one, half_r2, half_r2};
  finish_blocks(s);
  return s;
}

}  // namespace

FoldingSpec standard_folding(const std::string& kind, int n) {
  if (kind == "H3") return h_type(3);
  if (kind == "H4") return h_type(4);
  if (kind == "I2") return i_type(n);
  if (kind == "I2series") return i_series(n);
  if (kind == "F4E6") return f4e6();
  throw std::invalid_argument("unknown folding kind: " + kind);
}

std::vector<std::string> standard_kinds() { return {"H3", "H4", "I2", "I2series", "F4E6"}; }

}  // namespace cf
