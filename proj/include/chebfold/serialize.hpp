#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "chebfold/clustercat.hpp"
#include "chebfold/repcat.hpp"
#include "chebfold/tropical.hpp"
#include "chebfold/unfolding.hpp"

namespace cf {

using json = nlohmann::json;

struct SerializeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Int& x);
Int int_from_json(const json& j);

// {"m": m, "coeffs": [...]}
json to_json(const AlgReal& x);
AlgReal algreal_from_json(const json& j);

// {"rank": n, "coeffs": [...]}
json to_json(const ChebElem& x);
ChebElem chebelem_from_json(const json& j);

// {"ring": "int", "rows", "cols", "entries"} or {"ring": "zhat", "m", "rows", "cols", "entries"}
using AnyMatrix = std::variant<IntMat, ZMat>;
json to_json(const IntMat& a);
json to_json(const ZMat& a);
AnyMatrix matrix_from_json(const json& j);
AnyMatrix mutate_any(const AnyMatrix& a, int k);

json to_json(const FoldingSpec& spec);
json to_json(const UnfoldingReport& r);
json to_json(const FoldingTheoremReport& r);
json to_json(const CubeReport& r);
json to_json(const FoldedCategory& fc);

std::string ar_dot(const ARQuiver& ar, const FoldedCategory* fc = nullptr);
std::string ar_csv(const ARQuiver& ar, const FoldedCategory* fc = nullptr);
json ar_json(const ARQuiver& ar, const FoldedCategory* fc = nullptr);

// c- and g-vectors of the folded seeds along a word, one line per prefix and column
std::string seed_csv(const FoldingSpec& spec, const std::vector<int>& word);

json tilting_json(const ClusterCategory& cc, const TiltingEnumeration& en, const ExchangeWalkReport& walk);
std::string exchange_dot(const ClusterCategory& cc, const ExchangeWalkReport& walk);

json ring_table(int n);

}  // namespace cf
