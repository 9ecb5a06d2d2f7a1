#include "planartu/report.hpp"

namespace planartu {

Json make_report(const std::string& command, Json inputs, Json results,
                 long long runtime_ms) {
    Json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["runtime_ms"] = runtime_ms;
    return j;
}

Json to_json(const BoundVerdict& v) {
    return Json{{"n", v.n},         {"m", v.m},
                {"lhs_7m", v.lhs},  {"rhs_19n_minus_18", v.rhs},
                {"satisfied", v.satisfied}, {"tight", v.tight}};
}

Json to_json(const CrossoverFacts& f) {
    return Json{{"checked_from", f.checked_from},
                {"checked_to", f.checked_to},
                {"planar_side_consistent", f.planar_side_consistent},
                {"degree_side_consistent", f.degree_side_consistent},
                {"equality_at_12", f.equality_at_12}};
}

Json to_json(const DegreeHistogram& h) {
    Json counts = Json::object();
    for (auto [d, c] : h.counts) counts[std::to_string(d)] = c;
    return Json{{"counts", counts},
                {"min_degree", h.min_degree},
                {"max_degree", h.max_degree}};
}

Json to_json(const DoubleStarWitness& w) {
    return Json{{"backbone", Json::array({w.backbone_u, w.backbone_v})},
                {"leaves_u", set_vertices(w.leaves_u)},
                {"leaves_v", set_vertices(w.leaves_v)}};
}

Json to_json(const HypothesisFlags& f) {
    return Json{{"has_66_edge", f.has66_edge},
                {"has_656_path", f.has656_path},
                {"has_646_path", f.has646_path},
                {"has_636_path", f.has636_path},
                {"has_33_edge", f.has33_edge},
                {"bridgeless", f.bridgeless},
                {"min_degree_ge3", f.min_degree_ge3},
                {"max_degree", f.max_degree},
                {"connected", f.connected}};
}

Json to_json(const ExtremalRecord& r) {
    return Json{{"n", r.n},
                {"max_edges", r.max_edges},
                {"witness_count", r.witness_count},
                {"witnesses", r.witnesses},
                {"exhaustive", r.exhaustive},
                {"proven_upper_bound", r.proven_upper_bound},
                {"nodes", r.nodes}};
}

Json to_json(const Lemma3Report& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"class", row.feature.describe()},
                            {"graphs", row.graphs},
                            {"max_edges", row.max_edges},
                            {"bound_violations", row.bound_violations},
                            {"consequence_violations", row.consequence_violations}});
    }
    return Json{{"n_max", r.n_max},
                {"rows", rows},
                {"exhaustive", r.exhaustive},
                {"total_violations", r.total_violations}};
}

Json to_json(const ClaimDegree4Report& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"n", row.n},
                            {"graphs", row.graphs},
                            {"degree6_vertices", row.degree6_vertices},
                            {"claim_violations", row.claim_violations},
                            {"histogram_violations", row.histogram_violations},
                            {"common_neighbor_violations",
                             row.common_neighbor_violations}});
    }
    return Json{{"n_max", r.n_max},
                {"rows", rows},
                {"exhaustive", r.exhaustive},
                {"total_violations", r.total_violations}};
}

Json to_json(const SmallNReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"n", row.n},
                            {"planar_max", row.planar_max},
                            {"edge_cap", row.edge_cap},
                            {"ok", row.ok}});
    return Json{{"rows", rows},
                {"all_ok", r.all_ok},
                {"first_violation_n", r.first_violation_n}};
}

}  // namespace planartu
