#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planartu/graph.hpp"
#include "planartu/structure.hpp"

namespace planartu {

/// Constraint bundle steering the enumerator. Planarity, forbidden double
/// stars and the max-degree cap are inherited by supergraphs and prune during
/// generation; the rest are filtered on completed graphs.
struct EnumerationConstraints {
    int n = 1;
    int min_degree = 0;
    int max_degree = kMaxVertices - 1;
    bool require_connected = false;
    bool require_bridgeless = false;
    bool require_planar = false;
    std::vector<std::pair<int, int>> forbid;  // double-star patterns (m,n)
    std::optional<FeatureSpec> require_feature;
    std::vector<FeatureSpec> forbid_feature;

    void validate() const;  // throws on min_degree > max_degree or n < 1
};

struct Budget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

struct EnumerateOptions {
    Budget budget;
    int threads = 1;
    // When false, monotone constraints are applied only on completed graphs;
    // the visited set must be identical (pruning-soundness cross-check).
    bool prune_monotone = true;
};

struct EnumerationStats {
    std::uint64_t visited = 0;  // graphs passed to the callback
    std::uint64_t nodes = 0;    // accepted search-tree nodes, all levels
    bool exhaustive = true;     // false iff a budget cut the search short
};

/// Visits exactly one representative per isomorphism class of the graphs
/// satisfying c, via canonical augmentation by vertex addition. The callback
/// may run concurrently when threads > 1; the visited set is independent of
/// the worker count.
EnumerationStats enumerate_graphs(const EnumerationConstraints& c,
                                  const std::function<void(const Graph&)>& visit,
                                  const EnumerateOptions& opt = {});

/// Extremal search result. Witnesses are graph6 encodings of canonically
/// relabeled extremal graphs, sorted; a record is exhaustive only when it
/// came from a completed enumeration.
struct ExtremalRecord {
    int n = 0;
    int max_edges = 0;
    std::uint64_t witness_count = 0;
    std::vector<std::string> witnesses;
    bool exhaustive = false;
    int proven_upper_bound = 0;
    std::uint64_t nodes = 0;
};

enum class ExMode { exhaustive, branch_and_bound };

/// Maximum edge count over n-vertex hosts avoiding the (m,n) double star.
/// Exhaustive mode: exact over connected hosts, then composed over
/// disconnected splits by ex(n) = max(ex_conn(n), max_k ex(k) + ex(n-k)).
/// Branch-and-bound mode: best witness found plus the upper bound proven by
/// pruning (3n - 6 and degree-feasibility cuts).
ExtremalRecord ex_search(int n, std::pair<int, int> forbid, bool require_planar,
                         ExMode mode, const EnumerateOptions& opt = {});

/// Independent cross-check for the extremal value: enumerate maximal planar
/// graphs (m = 3n - 6), then for each one branch-and-bound over edge
/// deletions hitting every embedded copy of the forbidden star.
ExtremalRecord ex_search_triangulation_oracle(int n, std::pair<int, int> forbid,
                                              const EnumerateOptions& opt = {});

/// The 5-regular maximal planar graph on 12 vertices: apex 0 over ring
/// {1..5}, antiprism rings {1..5} and {6..10}, apex 11 under ring {6..10}.
Graph build_icosahedron();

/// Per-(n, class) exhaustive check of the four hypothesis classes.
struct Lemma3Report {
    struct Row {
        int n = 0;
        FeatureSpec feature;
        std::uint64_t graphs = 0;
        int max_edges = -1;
        std::uint64_t bound_violations = 0;
        // 6-5-6 class only: members missing a 6-6 edge
        std::uint64_t consequence_violations = 0;
    };
    int n_max = 0;
    std::vector<Row> rows;
    bool exhaustive = true;
    std::uint64_t total_violations = 0;
};
Lemma3Report verify_lemma3_classes(int n_max, const EnumerateOptions& opt = {});

struct ClaimDegree4Report {
    struct Row {
        int n = 0;
        std::uint64_t graphs = 0;
        std::uint64_t degree6_vertices = 0;
        std::uint64_t claim_violations = 0;      // deg-6 vertex, no <=4 neighbor
        std::uint64_t histogram_violations = 0;  // n6 > n3 + n4
        std::uint64_t common_neighbor_violations = 0;
    };
    int n_max = 0;
    std::vector<Row> rows;
    bool exhaustive = true;
    std::uint64_t total_violations = 0;
};
ClaimDegree4Report verify_claim_degree4(int n_max,
                                        const EnumerateOptions& opt = {});

/// Pure arithmetic: 3n - 6 (planar maximum) stays below floor((19n - 18)/7)
/// for every n <= n_max, and first_violation_n records where the inequality
/// first fails beyond that (13 for the default range).
struct SmallNReport {
    struct Row {
        int n = 0;
        long long planar_max = 0;
        long long edge_cap = 0;
        bool ok = false;
    };
    std::vector<Row> rows;
    bool all_ok = false;
    int first_violation_n = 0;
};
SmallNReport verify_small_n_claim(int n_max = 12);

}  // namespace planartu
