#pragma once

#include <json.hpp>

#include "planartu/bounds.hpp"
#include "planartu/double_star.hpp"
#include "planartu/enumerate.hpp"
#include "planartu/graph.hpp"
#include "planartu/structure.hpp"

namespace planartu {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

/// Top-level report envelope shared by all CLI commands. With fixed inputs
/// the serialized form is byte-identical apart from runtime_ms.
Json make_report(const std::string& command, Json inputs, Json results,
                 long long runtime_ms);

Json to_json(const BoundVerdict& v);
Json to_json(const CrossoverFacts& f);
Json to_json(const DegreeHistogram& h);
Json to_json(const DoubleStarWitness& w);
Json to_json(const HypothesisFlags& f);
Json to_json(const ExtremalRecord& r);
Json to_json(const Lemma3Report& r);
Json to_json(const ClaimDegree4Report& r);
Json to_json(const SmallNReport& r);

}  // namespace planartu
