#include "chebfold.h"

#include <cstring>
#include <string>

#include "chebfold/verify.hpp"

struct cf_folding {
  cf::FoldingSpec spec;
};

struct cf_matrix {
  cf::AnyMatrix m;
};

namespace {

thread_local std::string g_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
cf_status guard(Fn fn) {
  try {
    g_error.clear();
    fn();
    return CF_OK;
  } catch (const cf::SerializeError& e) {
    g_error = e.what();
    return CF_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    return CF_ERR_PARSE;
  } catch (const cf::MutationError& e) {
    g_error = e.what();
    return CF_ERR_MUTATION;
  } catch (const cf::ArithError& e) {
    g_error = e.what();
    return CF_ERR_ARITHMETIC;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return CF_ERR_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_error = e.what();
    return CF_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_error = e.what();
    return CF_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return CF_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
}

std::string ar_format(const cf::ARQuiver& ar, const cf::FoldedCategory* fc, const std::string& format) {
  if (format == "json") return (fc ? cf::to_json(*fc) : cf::ar_json(ar)).dump(2);
  if (format == "dot") return cf::ar_dot(ar, fc);
  if (format == "csv") return cf::ar_csv(ar, fc);
  throw std::invalid_argument("unknown format " + format);
}

}  // namespace

extern "C" {

const char* cf_last_error(void) { return g_error.c_str(); }

void cf_string_free(char* s) { std::free(s); }

const char* cf_version(void) { return "0.1.0"; }

cf_status cf_folding_new(const char* kind, int n, cf_folding** out) {
  return guard([&] {
    need(kind, "kind");
    need(out, "out");
    *out = new cf_folding{cf::standard_folding(kind, n)};
  });
}

void cf_folding_free(cf_folding* f) { delete f; }

cf_status cf_folding_json(const cf_folding* f, char** out) {
  return guard([&] {
    need(f, "folding");
    need(out, "out");
    *out = dup(cf::to_json(f->spec).dump(2));
  });
}

int cf_folding_size(const cf_folding* f) { return f ? f->spec.size() : -1; }

int cf_folding_folded_size(const cf_folding* f) { return f ? f->spec.folded_size() : -1; }

cf_status cf_matrix_from_json(const char* text, cf_matrix** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new cf_matrix{cf::matrix_from_json(nlohmann::json::parse(text))};
  });
}

cf_status cf_matrix_to_json(const cf_matrix* a, char** out) {
  return guard([&] {
    need(a, "matrix");
    need(out, "out");
    *out = dup(std::visit([](const auto& m) { return cf::to_json(m); }, a->m).dump());
  });
}

cf_status cf_matrix_mutate(const cf_matrix* a, int k, cf_matrix** out) {
  return guard([&] {
    need(a, "matrix");
    need(out, "out");
    *out = new cf_matrix{cf::mutate_any(a->m, k)};
  });
}

void cf_matrix_free(cf_matrix* a) { delete a; }

cf_status cf_ring_table(int n, char** out_json) {
  return guard([&] {
    need(out_json, "out");
    if (n < 1) throw std::invalid_argument("rank must be positive");
    *out_json = dup(cf::ring_table(n).dump(2));
  });
}

cf_status cf_unfold_check(const cf_folding* f, int depth, int random_words, int random_length, uint64_t seed,
                          int* passed, char** out_json) {
  return guard([&] {
    need(f, "folding");
    need(out_json, "out");
    if (depth < 0 || random_words < 0 || random_length < 0) throw std::invalid_argument("bounds must be >= 0");
    auto r = cf::check_weighted_unfolding(f->spec, depth, random_words, random_length, seed);
    if (passed) *passed = r.pass;
    *out_json = dup(cf::to_json(r).dump(2));
  });
}

cf_status cf_ar_build(const cf_folding* f, const char* format, char** out) {
  return guard([&] {
    need(f, "folding");
    need(format, "format");
    need(out, "out");
    auto fc = cf::build_folded_category(f->spec);
    *out = dup(ar_format(fc.ar, &fc, format));
  });
}

cf_status cf_ar_build_dynkin(const char* type, int p, const char* format, char** out) {
  return guard([&] {
    need(type, "type");
    need(format, "format");
    need(out, "out");
    auto ar = cf::knit_ar_quiver(cf::dynkin_quiver(type, p));
    *out = dup(ar_format(ar, nullptr, format));
  });
}

cf_status cf_fold_report(const cf_folding* f, int* passed, char** out_json) {
  return guard([&] {
    need(f, "folding");
    need(out_json, "out");
    auto fc = cf::build_folded_category(f->spec);
    auto r = cf::verify_folding_theorem(fc);
    if (passed) *passed = r.pass;
    *out_json = dup(cf::to_json(r).dump(2));
  });
}

cf_status cf_tropical_walk(const cf_folding* f, int depth, int random_words, int random_length, uint64_t seed,
                           int* passed, char** out_json) {
  return guard([&] {
    need(f, "folding");
    need(out_json, "out");
    if (depth < 0 || random_words < 0 || random_length < 0) throw std::invalid_argument("bounds must be >= 0");
    auto r = cf::verify_cube_walks(f->spec, depth, random_words, random_length, seed);
    if (passed) *passed = r.pass;
    *out_json = dup(cf::to_json(r).dump(2));
  });
}

cf_status cf_tropical_csv(const cf_folding* f, const int* word, size_t length, char** out_csv) {
  return guard([&] {
    need(f, "folding");
    need(out_csv, "out");
    if (length) need(word, "word");
    std::vector<int> w(word, word + length);
    for (int k : w)
      if (k < 0 || k >= f->spec.folded_size()) throw std::invalid_argument("letter outside the folded index set");
    *out_csv = dup(cf::seed_csv(f->spec, w));
  });
}

cf_status cf_seed_count(const cf_folding* f, size_t cap, char** out_json) {
  return guard([&] {
    need(f, "folding");
    need(out_json, "out");
    auto e = cf::enumerate_seeds(f->spec.B, cap);
    nlohmann::json j = {{"labelled", e.seeds.size()}, {"unlabelled", e.unlabelled}, {"cap_reached", e.cap_reached}};
    *out_json = dup(j.dump(2));
  });
}

cf_status cf_tilting(const cf_folding* f, const char* format, int* passed, char** out) {
  return guard([&] {
    need(f, "folding");
    need(format, "format");
    need(out, "out");
    cf::ClusterCategory cc(f->spec);
    auto en = cf::enumerate_Rplus_tilting(cc);
    auto walk = cf::exchange_walk(cc, en);
    if (passed) *passed = en.all_length_ok && en.hats_ok && en.complements_ok && walk.pass();
    std::string fmt = format;
    if (fmt == "json") *out = dup(cf::tilting_json(cc, en, walk).dump(2));
    else if (fmt == "dot") *out = dup(cf::exchange_dot(cc, walk));
    else throw std::invalid_argument("unknown format " + fmt);
  });
}

cf_status cf_verify_all(const char* kind, int n, uint64_t seed, int* passed, char** out_json) {
  return guard([&] {
    need(kind, "kind");
    need(out_json, "out");
    cf::VerifyOptions opt;
    opt.seed = seed;
    auto r = cf::verify_all(kind, n, opt);
    if (passed) *passed = r.pass;
    *out_json = dup(r.report.dump(2));
  });
}

}  // extern "C"
