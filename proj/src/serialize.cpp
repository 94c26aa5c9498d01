#include "chebfold/serialize.hpp"

#include <sstream>

namespace cf {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw SerializeError("bad integer " + j.dump());
    return x;
  }
  throw SerializeError("expected an integer, got " + j.dump());
}

json to_json(const AlgReal& x) {
  json c = json::array();
  for (const auto& v : x.coeffs()) c.push_back(to_json(v));
  return {{"m", x.m()}, {"coeffs", c}};
}

AlgReal algreal_from_json(const json& j) {
  if (j.is_number_integer()) throw SerializeError("bare integer needs a ring parameter");
  int m = j.at("m").get<int>();
  IntPoly p;
  for (const auto& c : j.at("coeffs")) p.push_back(int_from_json(c));
  return AlgReal(m, p);
}

json to_json(const ChebElem& x) {
  json c = json::array();
  for (const auto& v : x.coeffs()) c.push_back(to_json(v));
  return {{"rank", x.n()}, {"coeffs", c}};
}

ChebElem chebelem_from_json(const json& j) {
  std::vector<Int> c;
  for (const auto& v : j.at("coeffs")) c.push_back(int_from_json(v));
  return ChebElem(j.at("rank").get<int>(), c);
}

json to_json(const IntMat& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < a.cols; ++j) r.push_back(to_json(a(i, j)));
    rows.push_back(r);
  }
  return {{"ring", "int"}, {"rows", a.rows}, {"cols", a.cols}, {"entries", rows}};
}

json to_json(const ZMat& a) {
  json rows = json::array();
  int m = a.d.empty() ? 3 : a.d[0].m();
  for (int i = 0; i < a.rows; ++i) {
    json r = json::array();
    for (int j = 0; j < a.cols; ++j) r.push_back(to_json(a(i, j))["coeffs"]);
    rows.push_back(r);
  }
  return {{"ring", "zhat"}, {"m", m}, {"rows", a.rows}, {"cols", a.cols}, {"entries", rows}};
}

AnyMatrix matrix_from_json(const json& j) {
  try {
    std::string ring = j.at("ring").get<std::string>();
    const auto& e = j.at("entries");
    int rows = static_cast<int>(e.size());
    int cols = rows ? static_cast<int>(e[0].size()) : 0;
    if (j.contains("rows") && j["rows"].get<int>() != rows) throw SerializeError("row count mismatch");
    if (j.contains("cols") && j["cols"].get<int>() != cols) throw SerializeError("column count mismatch");
    if (ring == "int") {
      IntMat a(rows, cols, Int(0));
      for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(e[r].size()) != cols) throw SerializeError("ragged matrix");
        for (int c = 0; c < cols; ++c) a(r, c) = int_from_json(e[r][c]);
      }
      return a;
    }
    if (ring == "zhat") {
      int m = j.at("m").get<int>();
      if (m < 3) throw SerializeError("zhat ring needs m >= 3");
      ZMat a(rows, cols, AlgReal(m, 0L));
      for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(e[r].size()) != cols) throw SerializeError("ragged matrix");
        for (int c = 0; c < cols; ++c) {
          const auto& x = e[r][c];
          if (x.is_array()) {
            IntPoly p;
            for (const auto& v : x) p.push_back(int_from_json(v));
            a(r, c) = AlgReal(m, p);
          } else {
            a(r, c) = AlgReal(m, int_from_json(x));
          }
        }
      }
      return a;
    }
    throw SerializeError("unknown ring " + ring);
  } catch (const json::exception& ex) {
    throw SerializeError(std::string("malformed matrix: ") + ex.what());
  }
}

AnyMatrix mutate_any(const AnyMatrix& a, int k) {
  return std::visit([k](const auto& m) -> AnyMatrix { return mutate(m, k); }, a);
}

json to_json(const FoldingSpec& spec) {
  json vw = json::array(), kappa = spec.kappa;
  for (const auto& w : spec.vw) vw.push_back(to_json(w));
  return {{"name", spec.name},  {"m", spec.m},           {"cheb_rank", spec.cheb_n}, {"S", to_json(spec.S)},
          {"B", to_json(spec.B)}, {"F", spec.F},         {"blocks", spec.blocks},   {"weights", vw},
          {"kappa", kappa},     {"labels", spec.labels}, {"folded_labels", spec.folded_labels}};
}

json to_json(const UnfoldingReport& r) {
  json j = {{"pass", r.pass},
            {"words", r.words},
            {"nodes", r.nodes},
            {"depth", r.depth},
            {"random_words", r.random_words},
            {"random_length", r.random_length},
            {"seed", r.seed}};
  if (!r.pass) {
    j["failing_word"] = r.failing_word;
    j["error"] = r.error;
    json f = json::array();
    for (const auto& x : r.failure.failures)
      f.push_back({{"kind", x.kind},
                   {"block_i", x.block_i},
                   {"block_j", x.block_j},
                   {"column", x.column},
                   {"expected", x.expected},
                   {"actual", x.actual}});
    j["failures"] = f;
  }
  return j;
}

json to_json(const FoldingTheoremReport& r) {
  return {{"pass", r.pass},
          {"part_a", r.part_a},
          {"part_b", r.part_b},
          {"part_c", r.part_c},
          {"rows_are_roots", r.rows_are_roots},
          {"unique_decomposition", r.unique_decomposition},
          {"modules", r.modules},
          {"unit_rows", r.unit_rows},
          {"level_counts", r.level_counts},
          {"notes", r.notes}};
}

json to_json(const CubeReport& r) {
  return {{"pass", r.pass},
          {"words", r.words},
          {"steps", r.steps},
          {"depth", r.depth},
          {"random_words", r.random_words},
          {"random_length", r.random_length},
          {"seed", r.seed},
          {"g_formula_eps", r.g_formula_eps},
          {"failures", r.failures}};
}

static json vec_json(const std::vector<AlgReal>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json ar_json(const ARQuiver& ar, const FoldedCategory* fc) {
  json mods = json::array();
  for (int i = 0; i < ar.size(); ++i) {
    const auto& m = ar.mods[i];
    json o = {{"id", i},       {"dim", m.dim},          {"vertex", m.vertex}, {"t", m.t},
              {"col", m.col},  {"tau", m.tau},          {"tau_inv", m.tau_inv},
              {"projective", m.proj_of}, {"injective", m.inj_of}};
    if (fc) {
      o["dimproj"] = vec_json(fc->proj_dims[i]);
      o["level"] = fc->level[i];
      o["column"] = fc->column[i];
    }
    mods.push_back(o);
  }
  json arrows = json::array();
  for (auto [a, b] : ar.arrows) arrows.push_back({a, b});
  return {{"vertices", ar.q.n}, {"labels", ar.q.labels}, {"modules", mods}, {"arrows", arrows}};
}

json to_json(const FoldedCategory& fc) {
  json j = ar_json(fc.ar, &fc);
  json roots = json::array();
  for (const auto& r : fc.roots.positive) roots.push_back(vec_json(r));
  j["positive_roots"] = roots;
  j["cheb_rank"] = fc.n;
  return j;
}

static std::string dim_str(const DimVec& d) {
  std::string s;
  for (int x : d) s += std::to_string(x);
  return s;
}

static std::string vec_str(const std::vector<AlgReal>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string ar_dot(const ARQuiver& ar, const FoldedCategory* fc) {
  std::ostringstream os;
  os << "digraph AR {\n  node [shape=plaintext];\n";
  for (int i = 0; i < ar.size(); ++i) {
    const auto& m = ar.mods[i];
    std::string label = dim_str(m.dim);
    if (fc) label += "\\n" + vec_str(fc->proj_dims[i]);
    os << "  m" << i << " [label=\"" << label << "\", pos=\"" << m.col << "," << m.vertex << "!\"];\n";
  }
  for (auto [a, b] : ar.arrows) os << "  m" << a << " -> m" << b << ";\n";
  for (int i = 0; i < ar.size(); ++i)
    if (ar.mods[i].tau >= 0) os << "  m" << i << " -> m" << ar.mods[i].tau << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string ar_csv(const ARQuiver& ar, const FoldedCategory* fc) {
  std::ostringstream os;
  os << "id,vertex,t,col,dim";
  if (fc) os << ",level,column,dimproj";
  os << "\n";
  for (int i = 0; i < ar.size(); ++i) {
    const auto& m = ar.mods[i];
    os << i << "," << ar.q.labels[m.vertex] << "," << m.t << "," << m.col << "," << dim_str(m.dim);
    if (fc) os << "," << fc->level[i] << "," << fc->column[i] << ",\"" << vec_str(fc->proj_dims[i]) << "\"";
    os << "\n";
  }
  return os.str();
}

std::string seed_csv(const FoldingSpec& spec, const std::vector<int>& word) {
  std::ostringstream os;
  int r = spec.folded_size();
  os << "step,word,column";
  for (int i = 0; i < r; ++i) os << ",c" << i;
  for (int i = 0; i < r; ++i) os << ",g" << i;
  os << "\n";
  FSeed s = initial_seed(spec.B, spec.zero(), spec.one());
  for (size_t step = 0; step <= word.size(); ++step) {
    if (step > 0) s = mutate_seed(s, word[step - 1]);
    ZMat C = s.C(), G = g_matrix(s);
    std::string w;
    for (int k : s.word) w += std::to_string(k);
    for (int j = 0; j < r; ++j) {
      os << step << "," << (w.empty() ? "-" : w) << "," << j;
      for (int i = 0; i < r; ++i) os << "," << C(i, j).str();
      for (int i = 0; i < r; ++i) os << "," << G(i, j).str();
      os << "\n";
    }
  }
  return os.str();
}

json tilting_json(const ClusterCategory& cc, const TiltingEnumeration& en, const ExchangeWalkReport& walk) {
  json objs = json::array();
  for (int id = 0; id < walk.objects; ++id) {
    objs.push_back({{"id", id}, {"word", walk.words[id]}, {"G", to_json(walk.folded_G[id])},
                    {"B", to_json(walk.folded_B[id])}});
  }
  json sets = json::array();
  for (const auto& T : en.objects) {
    json names = json::array();
    for (int x : T) names.push_back(cc.name(x));
    sets.push_back(names);
  }
  return {{"count", en.objects.size()},
          {"objects", sets},
          {"walk", objs},
          {"edges", walk.edge_list},
          {"length_ok", en.all_length_ok},
          {"hats_ok", en.hats_ok},
          {"complements_ok", en.complements_ok},
          {"almost_complete", en.almost_complete},
          {"walk_pass", walk.pass()},
          {"b_sign", walk.b_sign}};
}

std::string exchange_dot(const ClusterCategory& cc, const ExchangeWalkReport& walk) {
  (void)cc;
  std::ostringstream os;
  os << "graph exchange {\n";
  for (int id = 0; id < walk.objects; ++id) {
    std::string w;
    for (int k : walk.words[id]) w += std::to_string(k);
    os << "  t" << id << " [label=\"" << (w.empty() ? "T0" : w) << "\"];\n";
  }
  for (const auto& e : walk.edge_list) os << "  t" << e[0] << " -- t" << e[1] << ";\n";
  os << "}\n";
  return os.str();
}

json ring_table(int n) {
  json prods = json::array();
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      ChebElem p = ChebElem::theta(n, k) * ChebElem::theta(n, l);
      prods.push_back({{"k", k}, {"l", l}, {"product", to_json(p)["coeffs"]}});
    }
  json sig = json::array();
  for (int k = 0; k < n; ++k) {
    AlgReal s = sigma(ChebElem::theta(n, k));
    sig.push_back({{"k", k}, {"value", s.str()}, {"approx", s.to_double()}});
  }
  return {{"rank", n}, {"m", 2 * n + 1}, {"products", prods}, {"sigma", sig}};
}

}  // namespace cf
