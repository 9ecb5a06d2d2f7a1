#pragma once

#include <array>
#include <string>
#include <vector>

#include "planartu/graph.hpp"

namespace planartu {

/// Degree pattern of a structural feature: an edge whose endpoint degrees are
/// {k,l}, or a three-vertex path with degree sequence (k,l,s).
struct FeatureSpec {
    enum class Kind { kl_edge, kls_path };
    Kind kind = Kind::kl_edge;
    int k = 0;
    int l = 0;
    int s = 0;  // unused for edges

    bool operator==(const FeatureSpec&) const = default;
    std::string describe() const;
};

/// A feature instance: the pattern plus the vertices realizing it.
/// Edge locations store (u,v) with u < v; path locations (u,v,w) store the
/// orientation with d(u) = k, and u < w when k = s.
struct StructuralFeature {
    FeatureSpec spec;
    std::array<int, 3> vertices{};
};

std::vector<StructuralFeature> find_kl_edges(const Graph& g, int k, int l);
std::vector<StructuralFeature> find_kls_paths(const Graph& g, int k, int l,
                                              int s);

bool has_kl_edge(const Graph& g, int k, int l);
bool has_kls_path(const Graph& g, int k, int l, int s);
bool has_feature(const Graph& g, const FeatureSpec& spec);

/// True iff no edge joins two degree-6 vertices.
bool degree6_set_independent(const Graph& g);

/// True iff every pair of degree-6 vertices has empty common neighborhood.
bool degree6_common_neighbor_free(const Graph& g);

/// Per degree-6 vertex: does some neighbor have degree <= 4?
struct ClaimDegree4Verdict {
    int vertex = 0;
    bool has_low_degree_neighbor = false;
};
std::vector<ClaimDegree4Verdict> check_claim_degree4(const Graph& g);

/// Bundle of the structural predicates steering the case analysis.
struct HypothesisFlags {
    bool has66_edge = false;
    bool has656_path = false;
    bool has646_path = false;
    bool has636_path = false;
    bool has33_edge = false;
    bool bridgeless = false;
    bool min_degree_ge3 = false;
    bool connected = false;
    int max_degree = 0;
};
HypothesisFlags hypothesis_class(const Graph& g);

}  // namespace planartu
