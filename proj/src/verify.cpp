#include "chebfold/verify.hpp"

namespace cf {

VerifyResult verify_all(const std::string& kind, int n, const VerifyOptions& opt) {
  VerifyResult res;
  FoldingSpec spec = standard_folding(kind, n);
  json& rep = res.report;
  rep["folding"] = spec.name;
  rep["seed"] = opt.seed;
  json sections = json::object();
  auto section = [&](const std::string& name, bool pass, json detail) {
    detail["pass"] = pass;
    sections[name] = detail;
    res.pass = res.pass && pass;
  };

  auto ur = check_weighted_unfolding(spec, opt.unfold_depth, opt.unfold_random, opt.unfold_length, opt.seed);
  section("unfolding", ur.pass, to_json(ur));

  if (spec.cheb_n > 0) {
    auto fc = build_folded_category(spec);
    auto fr = verify_folding_theorem(fc);
    section("folding", fr.pass, to_json(fr));

    int depth = opt.cube_depth >= 0 ? opt.cube_depth : (spec.folded_size() >= 4 ? 6 : 8);
    auto cr = verify_cube_walks(spec, depth, opt.cube_random, opt.cube_length, opt.seed);
    json cj = to_json(cr);
    section("cube", cr.ok_all(kCubeFaceChecks), cj);
    section("roots", cr.ok_all(kRootChecks), {{"words", cr.words}});
    section("blocks", cr.ok_all(kBlockChecks), {{"words", cr.words}});

    ClusterCategory cc(spec);
    auto en = enumerate_Rplus_tilting(cc);
    auto walk = exchange_walk(cc, en);
    section("tilting", en.all_length_ok && en.hats_ok && en.partition_ok && walk.connected,
            {{"count", en.objects.size()}, {"notes", en.notes}});
    section("complements", en.complements_ok && walk.regular, {{"almost_complete", en.almost_complete}});
    section("g_vectors", walk.g_matches_tropical && walk.g_scaling && walk.dF_identity && walk.path_independent,
            {{"b_sign", walk.b_sign}, {"notes", walk.notes}});
  }
  rep["sections"] = sections;
  rep["pass"] = res.pass;
  return res;
}

}  // namespace cf
