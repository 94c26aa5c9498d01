#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chebfold.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Common {
  std::string kind = "H3";
  int n = 0;
  std::string format = "json";
  std::string output;
  uint64_t seed = 1;
};

void add_kind(CLI::App* app, Common& c) {
  app->add_option("--kind,--type", c.kind, "H3, H4, I2, I2series or F4E6")->capture_default_str();
  app->add_option("--n", c.n, "parameter for I2 (I2(2n+1)) and I2series (A_n)")->capture_default_str();
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return kPass;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "cannot write " << path << "\n";
    return kFail;
  }
  f << text;
  return kPass;
}

// owns a string returned by the library
struct Text {
  char* p = nullptr;
  ~Text() { cf_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int report(cf_status s) {
  std::cerr << "error: " << cf_last_error() << "\n";
  return s == CF_ERR_ARGUMENT || s == CF_ERR_PARSE ? kUsage : kFail;
}

struct Folding {
  cf_folding* f = nullptr;
  ~Folding() { cf_folding_free(f); }
};

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) {
      size_t used = 0;
      w.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    }
  return w;
}

const std::map<std::string, std::vector<std::string>> kVerifyGroups = {
    {"cube", {"cube_c", "cube_g", "inverse", "g_formula", "conditions"}},
    {"roots", {"roots", "sign_coherent"}},
    {"blocks", {"blocks", "commute"}},
    {"dets", {"det_c", "det_cf", "det_sigma", "det_alternates"}},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mutation, folding and tilting computations over Z[2cos(pi/m)]"};
  app.require_subcommand(1);
  Common c;
  int rank = 2, at = 0, depth = 6, random_words = 200, random_length = 20;
  std::string matrix_path, word, verify_list = "cube,blocks,roots,dets", dynkin;
  int p = 0;
  size_t cap = 100000;

  auto* ring = app.add_subcommand("ring", "Chebyshev product table and sigma values");
  ring->add_option("--n", rank, "Chebyshev rank")->capture_default_str();
  ring->add_option("-o,--output", c.output);

  auto* mut = app.add_subcommand("mutate", "mutate an exchange matrix read from JSON");
  mut->add_option("--matrix", matrix_path, "JSON matrix file")->required();
  mut->add_option("--at", at, "mutation vertex");
  mut->add_option("--word", word, "comma separated mutation sequence, overrides --at");
  mut->add_option("-o,--output", c.output);

  auto* unfold = app.add_subcommand("unfold", "check the unfolding conditions along mutation words");
  add_kind(unfold, c);
  unfold->add_option("--depth", depth)->capture_default_str();
  unfold->add_option("--random", random_words)->capture_default_str();
  unfold->add_option("--length", random_length)->capture_default_str();
  unfold->add_option("--seed", c.seed)->capture_default_str();
  unfold->add_flag("--show", "print the folding data instead of checking");
  unfold->add_option("-o,--output", c.output);

  auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver");
  auto* ar_build = ar->add_subcommand("build", "knit the AR quiver");
  ar->require_subcommand(1);
  add_kind(ar_build, c);
  ar_build->add_option("--dynkin", dynkin, "A, D or E quiver instead of a folding");
  ar_build->add_option("--p", p, "rank of the Dynkin quiver");
  ar_build->add_option("--format", c.format, "json, dot or csv")->capture_default_str();
  ar_build->add_option("-o,--output", c.output);

  auto* fold = app.add_subcommand("fold", "projected dimension vectors and the column decomposition");
  add_kind(fold, c);
  fold->add_option("-o,--output", c.output);

  auto* trop = app.add_subcommand("tropical", "tropical seeds");
  trop->require_subcommand(1);
  auto* walk = trop->add_subcommand("walk", "lifted walks with cube, root, block and determinant checks");
  add_kind(walk, c);
  walk->add_option("--depth", depth)->capture_default_str();
  walk->add_option("--random", random_words)->capture_default_str();
  walk->add_option("--length", random_length)->capture_default_str();
  walk->add_option("--seed", c.seed)->capture_default_str();
  walk->add_option("--verify", verify_list, "subset of cube,roots,blocks,dets")->capture_default_str();
  walk->add_option("-o,--output", c.output);
  auto* csv = trop->add_subcommand("csv", "c- and g-vectors along a word");
  add_kind(csv, c);
  csv->add_option("--word", word, "comma separated folded letters");
  csv->add_option("-o,--output", c.output);
  auto* seeds = trop->add_subcommand("seeds", "count distinct seeds by breadth first search");
  add_kind(seeds, c);
  seeds->add_option("--cap", cap)->capture_default_str();
  seeds->add_option("-o,--output", c.output);

  auto* tilt = app.add_subcommand("tilting", "enumerate R+-tilting objects and the exchange graph");
  add_kind(tilt, c);
  tilt->add_option("--format", c.format, "json or dot")->capture_default_str();
  tilt->add_option("-o,--output", c.output);

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->require_subcommand(1);
  auto* ver_all = ver->add_subcommand("all", "every check for one folding");
  add_kind(ver_all, c);
  ver_all->add_option("--seed", c.seed)->capture_default_str();
  ver_all->add_option("-o,--output", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Text out;
  int passed = 1;
  cf_status s = CF_OK;

  if (ring->parsed()) {
    s = cf_ring_table(rank, &out.p);
  } else if (mut->parsed()) {
    std::ifstream f(matrix_path);
    if (!f) {
      std::cerr << "cannot read " << matrix_path << "\n";
      return kUsage;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    cf_matrix* m = nullptr;
    if ((s = cf_matrix_from_json(buf.str().c_str(), &m)) != CF_OK) return report(s);
    std::vector<int> w{at};
    try {
      if (!word.empty()) w = parse_word(word);
    } catch (const std::exception&) {
      std::cerr << "bad word " << word << "\n";
      cf_matrix_free(m);
      return kUsage;
    }
    for (int k : w) {
      cf_matrix* next = nullptr;
      s = cf_matrix_mutate(m, k, &next);
      cf_matrix_free(m);
      if (s != CF_OK) return report(s);
      m = next;
    }
    s = cf_matrix_to_json(m, &out.p);
    cf_matrix_free(m);
  } else if (ar_build->parsed() && !dynkin.empty()) {
    s = cf_ar_build_dynkin(dynkin.c_str(), p, c.format.c_str(), &out.p);
  } else if (ver_all->parsed()) {
    s = cf_verify_all(c.kind.c_str(), c.n, c.seed, &passed, &out.p);
  } else {
    Folding fd;
    if ((s = cf_folding_new(c.kind.c_str(), c.n, &fd.f)) != CF_OK) return report(s);
    if (unfold->parsed()) {
      if (unfold->count("--show")) s = cf_folding_json(fd.f, &out.p);
      else s = cf_unfold_check(fd.f, depth, random_words, random_length, c.seed, &passed, &out.p);
    } else if (ar_build->parsed()) {
      s = cf_ar_build(fd.f, c.format.c_str(), &out.p);
    } else if (fold->parsed()) {
      s = cf_fold_report(fd.f, &passed, &out.p);
    } else if (walk->parsed()) {
      s = cf_tropical_walk(fd.f, depth, random_words, random_length, c.seed, &passed, &out.p);
      if (s == CF_OK) {
        auto j = nlohmann::json::parse(out.str());
        const auto& failures = j.at("failures");
        passed = 1;
        std::stringstream ss(verify_list);
        std::string group;
        while (std::getline(ss, group, ',')) {
          auto it = kVerifyGroups.find(group);
          if (it == kVerifyGroups.end()) {
            std::cerr << "unknown check group " << group << "\n";
            return kUsage;
          }
          for (const auto& cat : it->second)
            if (failures.contains(cat)) passed = 0;
        }
      }
    } else if (csv->parsed()) {
      std::vector<int> w;
      try {
        w = parse_word(word);
      } catch (const std::exception&) {
        std::cerr << "bad word " << word << "\n";
        return kUsage;
      }
      s = cf_tropical_csv(fd.f, w.data(), w.size(), &out.p);
    } else if (seeds->parsed()) {
      s = cf_seed_count(fd.f, cap, &out.p);
    } else if (tilt->parsed()) {
      s = cf_tilting(fd.f, c.format.c_str(), &passed, &out.p);
    }
  }
  if (s != CF_OK) return report(s);
  int e = emit(out.str(), c.output);
  if (e != kPass) return e;
  return passed ? kPass : kFail;
}
