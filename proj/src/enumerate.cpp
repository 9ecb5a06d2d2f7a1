#include "planartu/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "planartu/bounds.hpp"
#include "planartu/canonical.hpp"
#include "planartu/double_star.hpp"
#include "planartu/graph6.hpp"
#include "planartu/planarity.hpp"

namespace planartu {

void EnumerationConstraints::validate() const {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("enumeration: n must be in 1..64");
    if (min_degree < 0 || min_degree > max_degree)
        throw std::invalid_argument("enumeration: need 0 <= min_degree <= max_degree");
    if (max_degree > kMaxVertices - 1)
        throw std::invalid_argument("enumeration: max_degree above capacity");
    for (auto [a, b] : forbid)
        if (a < 1 || b < 1)
            throw std::invalid_argument("enumeration: forbidden star needs m, n >= 1");
}

namespace {

using Clock = std::chrono::steady_clock;

void atomic_max(std::atomic<int>& target, int value) {
    int cur = target.load();
    while (cur < value && !target.compare_exchange_weak(cur, value)) {
    }
}

// Canonical augmentation by vertex addition. A child G+v is kept iff deleting
// the canonically-last vertex w* of the child gives the parent's isomorphism
// class back; isomorphic children of one parent are deduplicated locally.
// Exactness: the canonical labeling of isomorphic labeled children maps last
// positions onto each other, so accepted copies of one class determine the
// same parent class; duplicates can only share a parent, where the local
// set catches them. Completeness: any graph's canonical-deletion ancestor
// chain consists of induced subgraphs, which inherit planarity, freeness and
// the degree cap, so monotone pruning never cuts the accepting path.
struct Search {
    const EnumerationConstraints& c;
    const EnumerateOptions& opt;
    const std::function<void(const Graph&)>& visit;

    Clock::time_point start = Clock::now();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> truncated{false};
    std::mutex visit_mutex;
    bool serialize_visit = false;

    // Hooks for the extremal search: subtrees whose optimistic edge count
    // cannot reach the floor are cut.
    int static_edge_floor = 0;
    const std::atomic<int>* best_edges = nullptr;
    bool prune_ties = false;
    std::atomic<int>* abandoned_bound = nullptr;

    Search(const EnumerationConstraints& cons, const EnumerateOptions& options,
           const std::function<void(const Graph&)>& v)
        : c(cons), opt(options), visit(v) {}

    bool budget_exceeded() {
        std::uint64_t id = ++nodes;
        if (id > opt.budget.max_nodes) return true;
        if ((id & 1023) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            if (secs > opt.budget.max_seconds) return true;
        }
        return false;
    }

    int upper_bound_edges(const Graph& g) const {
        int cap = c.require_planar && c.n >= 3 ? 3 * c.n - 6
                                               : c.n * (c.n - 1) / 2;
        long long total = g.size();
        for (int i = g.order(); i < c.n; ++i)
            total += std::min(i, opt.prune_monotone ? c.max_degree : c.n - 1);
        return static_cast<int>(std::min<long long>(total, cap));
    }

    int required_edge_floor() const {
        int floor = static_edge_floor;
        if (best_edges)
            floor = std::max(floor, best_edges->load() + (prune_ties ? 1 : 0));
        return floor;
    }

    bool monotone_ok(const Graph& g) const {
        if (c.require_planar && !is_planar(g)) return false;
        for (auto [a, b] : c.forbid)
            if (contains_double_star_fast(g, a, b)) return false;
        return true;
    }

    bool final_ok(const Graph& g) const {
        auto h = degree_histogram(g);
        if (h.min_degree < c.min_degree) return false;
        if (!opt.prune_monotone) {
            if (h.max_degree > c.max_degree) return false;
            if (!monotone_ok(g)) return false;
        }
        if (c.require_connected && !is_connected(g)) return false;
        if (c.require_bridgeless && has_bridge(g)) return false;
        if (c.require_feature && !has_feature(g, *c.require_feature))
            return false;
        for (const auto& f : c.forbid_feature)
            if (has_feature(g, f)) return false;
        return true;
    }

    void emit(const Graph& g) {
        ++visited;
        if (serialize_visit) {
            std::lock_guard<std::mutex> lock(visit_mutex);
            visit(g);
        } else {
            visit(g);
        }
    }

    void abandon(const Graph& g) {
        truncated.store(true);
        if (abandoned_bound) atomic_max(*abandoned_bound, upper_bound_edges(g));
    }

    // frontier != nullptr: stop at frontier_level and collect instead of
    // recursing further (parallel sharding).
    void recurse(const Graph& g, const CanonicalForm& form, int frontier_level,
                 std::vector<std::pair<Graph, CanonicalForm>>* frontier) {
        if (truncated.load()) {
            if (abandoned_bound) atomic_max(*abandoned_bound, upper_bound_edges(g));
            return;
        }
        int k = g.order();
        if (frontier && k == frontier_level && k < c.n) {
            frontier->emplace_back(g, form);
            return;
        }
        if (budget_exceeded()) {
            abandon(g);
            return;
        }
        if (k == c.n) {
            if (final_ok(g)) emit(g);
            return;
        }

        VertexSet allowed = g.vertex_mask();
        int new_degree_cap = k;
        if (opt.prune_monotone) {
            new_degree_cap = std::min(new_degree_cap, c.max_degree);
            for (int v = 0; v < k; ++v)
                if (g.degree(v) >= c.max_degree) allowed &= ~vertex_bit(v);
        }
        int floor = required_edge_floor();

        std::set<CanonicalForm> child_forms;
        VertexSet limit = VertexSet{1} << k;
        for (VertexSet x = 0; x < limit; ++x) {
            if (x & ~allowed) continue;
            if (std::popcount(x) > new_degree_cap) continue;
            if (truncated.load()) {
                abandon(g);
                return;
            }
            Graph child = g.with_vertex(x);
            if (floor > 0 && upper_bound_edges(child) < floor) continue;
            if (opt.prune_monotone && !monotone_ok(child)) continue;
            auto lab = canonical_labeling(child);
            int wstar = lab.order[k];
            if (wstar != k &&
                canonical_form(child.delete_vertex(wstar)) != form)
                continue;
            if (!child_forms.insert(lab.form).second) continue;
            recurse(child, lab.form, frontier_level, frontier);
            if (best_edges) floor = required_edge_floor();
        }
    }

    EnumerationStats run() {
        c.validate();
        Graph root = Graph::empty(1);
        CanonicalForm root_form = canonical_form(root);
        int workers = std::max(1, opt.threads);
        if (workers == 1 || c.n <= 3) {
            recurse(root, root_form, -1, nullptr);
        } else {
            serialize_visit = true;
            int frontier_level = std::min(c.n - 1, 7);
            std::vector<std::pair<Graph, CanonicalForm>> frontier;
            recurse(root, root_form, frontier_level, &frontier);
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next.fetch_add(1); i < frontier.size();
                         i = next.fetch_add(1)) {
                        if (truncated.load()) {
                            abandon(frontier[i].first);
                            continue;
                        }
                        recurse(frontier[i].first, frontier[i].second, -1,
                                nullptr);
                    }
                });
            for (auto& th : pool) th.join();
        }
        EnumerationStats stats;
        stats.visited = visited.load();
        stats.nodes = nodes.load();
        stats.exhaustive = !truncated.load();
        return stats;
    }
};

}  // namespace

EnumerationStats enumerate_graphs(const EnumerationConstraints& c,
                                  const std::function<void(const Graph&)>& visit,
                                  const EnumerateOptions& opt) {
    Search search(c, opt, visit);
    return search.run();
}

namespace {

struct ConnectedExResult {
    int value = -1;
    std::vector<std::string> witnesses;  // canonical graph6, sorted
    bool exhaustive = true;
    int proven_upper = 0;
    std::uint64_t nodes = 0;
};

ConnectedExResult ex_connected(int n, std::pair<int, int> forbid,
                               bool require_planar, bool bnb,
                               const EnumerateOptions& opt) {
    EnumerationConstraints c;
    c.n = n;
    c.require_planar = require_planar;
    c.require_connected = true;
    c.forbid = {forbid};

    std::atomic<int> best{-1};
    std::atomic<int> abandoned{-1};
    std::mutex mu;
    std::vector<std::string> wits;

    std::function<void(const Graph&)> visitor = [&](const Graph& g) {
        int m = g.size();
        std::lock_guard<std::mutex> lock(mu);
        if (m > best.load()) {
            best.store(m);
            wits.clear();
            wits.push_back(graph6_encode(canonical_relabel(g)));
        } else if (m == best.load() && !bnb) {
            wits.push_back(graph6_encode(canonical_relabel(g)));
        }
    };

    Search search(c, opt, visitor);
    search.best_edges = &best;
    search.prune_ties = bnb;
    search.abandoned_bound = &abandoned;
    auto stats = search.run();

    ConnectedExResult out;
    out.value = best.load();
    std::sort(wits.begin(), wits.end());
    wits.erase(std::unique(wits.begin(), wits.end()), wits.end());
    out.witnesses = std::move(wits);
    out.exhaustive = stats.exhaustive;
    out.nodes = stats.nodes;
    out.proven_upper =
        stats.exhaustive ? out.value : std::max(out.value, abandoned.load());
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    for (int v = 0; v < b.order(); ++v) g = g.with_vertex(0);
    for (auto [u, v] : b.edge_list())
        g = g.with_edge(a.order() + u, a.order() + v);
    return g;
}

}  // namespace

ExtremalRecord ex_search(int n, std::pair<int, int> forbid, bool require_planar,
                         ExMode mode, const EnumerateOptions& opt) {
    if (n < 1) throw std::invalid_argument("ex_search: n must be >= 1");
    std::vector<int> value(n + 1, 0);
    std::vector<std::vector<std::string>> wit(n + 1);
    bool exhaustive = true;
    std::uint64_t nodes = 0;
    int top_upper = 0;

    for (int k = 1; k <= n; ++k) {
        bool bnb = mode == ExMode::branch_and_bound && k == n;
        auto conn = ex_connected(k, forbid, require_planar, bnb, opt);
        nodes += conn.nodes;
        exhaustive = exhaustive && conn.exhaustive;

        int best = conn.value;
        for (int j = 1; j < k; ++j)
            best = std::max(best, value[j] + value[k - j]);

        std::set<std::string> merged;
        if (best == conn.value)
            merged.insert(conn.witnesses.begin(), conn.witnesses.end());
        for (int j = 1; j <= k - j; ++j) {
            if (value[j] + value[k - j] != best) continue;
            for (const auto& wa : wit[j])
                for (const auto& wb : wit[k - j]) {
                    Graph u = disjoint_union(graph6_decode(wa), graph6_decode(wb));
                    merged.insert(graph6_encode(canonical_relabel(u)));
                }
        }
        value[k] = best;
        wit[k].assign(merged.begin(), merged.end());
        if (k == n) {
            int split_upper = 0;
            for (int j = 1; j < k; ++j)
                split_upper = std::max(split_upper, value[j] + value[k - j]);
            top_upper = std::max(conn.proven_upper, split_upper);
        }
    }

    ExtremalRecord rec;
    rec.n = n;
    rec.max_edges = value[n];
    rec.witnesses = wit[n];
    rec.witness_count = rec.witnesses.size();
    rec.exhaustive = exhaustive;
    rec.nodes = nodes;
    rec.proven_upper_bound = exhaustive ? rec.max_edges : top_upper;
    return rec;
}

namespace {

// Explicit embedded copy of S_{m,n}: backbone plus all leaf edges. Found by
// subset search over the u-side leaves with exact counting on the v-side;
// deliberately does not reuse the closed-form feasibility test.
std::optional<std::vector<std::pair<int, int>>> find_star_copy(const Graph& g,
                                                               int m, int n) {
    for (auto [p, q] : g.edge_list()) {
        const std::array<std::pair<int, int>, 2> orientations{{{p, q}, {q, p}}};
        for (auto [u, v] : orientations) {
            auto a = set_vertices(g.neighbors_unchecked(u) & ~vertex_bit(v));
            VertexSet b = g.neighbors_unchecked(v) & ~vertex_bit(u);
            if (static_cast<int>(a.size()) < m || set_size(b) < n) continue;
            std::vector<int> idx(m);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                VertexSet chosen = 0;
                for (int i : idx) chosen |= vertex_bit(a[i]);
                VertexSet rest = b & ~chosen;
                if (set_size(rest) >= n) {
                    std::vector<std::pair<int, int>> copy;
                    copy.emplace_back(u, v);
                    for (int i : idx) copy.emplace_back(u, a[i]);
                    for (int taken = 0; taken < n; ++taken) {
                        copy.emplace_back(v, first_vertex(rest));
                        rest &= rest - 1;
                    }
                    return copy;
                }
                int pos = m - 1;
                while (pos >= 0 &&
                       idx[pos] == static_cast<int>(a.size()) - m + pos)
                    --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

struct HittingSetSearch {
    int pattern_m, pattern_n;
    std::atomic<int>& best;
    std::mutex& mu;
    std::set<std::string>& witnesses;

    std::vector<std::pair<int, int>> base_edges;
    std::unordered_set<std::uint64_t> seen;

    int edge_index(int u, int v) const {
        for (std::size_t i = 0; i < base_edges.size(); ++i)
            if (base_edges[i] == std::make_pair(std::min(u, v), std::max(u, v)))
                return static_cast<int>(i);
        return -1;
    }

    void run(const Graph& g, std::uint64_t deleted) {
        if (g.size() < best.load()) return;  // cannot beat; ties still explored
        if (!seen.insert(deleted).second) return;
        auto copy = find_star_copy(g, pattern_m, pattern_n);
        if (!copy) {
            std::lock_guard<std::mutex> lock(mu);
            int m = g.size();
            if (m > best.load()) {
                best.store(m);
                witnesses.clear();
            }
            if (m == best.load())
                witnesses.insert(graph6_encode(canonical_relabel(g)));
            return;
        }
        for (auto [u, v] : *copy)
            run(g.without_edge(u, v),
                deleted | (std::uint64_t{1} << edge_index(u, v)));
    }
};

}  // namespace

ExtremalRecord ex_search_triangulation_oracle(int n, std::pair<int, int> forbid,
                                              const EnumerateOptions& opt) {
    if (n < 1) throw std::invalid_argument("ex oracle: n must be >= 1");
    ExtremalRecord rec;
    rec.n = n;
    if (n <= 2) {
        Graph g = n == 1 ? Graph::empty(1) : Graph::build(2, {{0, 1}});
        rec.max_edges = g.size();
        rec.witnesses = {graph6_encode(g)};
        rec.witness_count = 1;
        rec.exhaustive = true;
        rec.proven_upper_bound = rec.max_edges;
        return rec;
    }
    if (3 * n - 6 > 63)
        throw std::invalid_argument("ex oracle: edge mask capacity exceeded");

    std::atomic<int> best{-1};
    std::mutex mu;
    std::set<std::string> wits;
    int target = 3 * n - 6;

    EnumerationConstraints c;
    c.n = n;
    c.require_planar = true;

    std::function<void(const Graph&)> visitor = [&](const Graph& g) {
        if (g.size() != target) return;  // maximal planar hosts only
        HittingSetSearch search{forbid.first, forbid.second, best, mu, wits, g.edge_list(), {}};
        search.run(g, 0);
    };

    Search search(c, opt, visitor);
    search.static_edge_floor = target;
    auto stats = search.run();

    rec.max_edges = best.load();
    rec.witnesses.assign(wits.begin(), wits.end());
    rec.witness_count = rec.witnesses.size();
    rec.exhaustive = stats.exhaustive;
    rec.nodes = stats.nodes;
    rec.proven_upper_bound = stats.exhaustive ? rec.max_edges : target;
    return rec;
}

Graph build_icosahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 5; ++i) edges.emplace_back(0, i);
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(1 + i, 1 + (i + 1) % 5);      // inner ring
        edges.emplace_back(6 + i, 6 + (i + 1) % 5);      // outer ring
        edges.emplace_back(1 + i, 6 + i);                // antiprism struts
        edges.emplace_back(1 + i, 6 + (i + 1) % 5);
    }
    for (int i = 6; i <= 10; ++i) edges.emplace_back(11, i);
    return Graph::build(12, edges);
}

Lemma3Report verify_lemma3_classes(int n_max, const EnumerateOptions& opt) {
    if (n_max < 1 || n_max > kMaxVertices)
        throw std::invalid_argument("verify_lemma3_classes: bad n_max");
    const std::array<FeatureSpec, 4> classes{{
        {FeatureSpec::Kind::kl_edge, 6, 6, 0},
        {FeatureSpec::Kind::kls_path, 6, 5, 6},
        {FeatureSpec::Kind::kls_path, 6, 4, 6},
        {FeatureSpec::Kind::kls_path, 6, 3, 6},
    }};
    Lemma3Report report;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        std::array<Lemma3Report::Row, 4> rows;
        for (int i = 0; i < 4; ++i) rows[i] = {n, classes[i], 0, -1, 0, 0};

        EnumerationConstraints c;
        c.n = n;
        c.min_degree = 3;
        c.max_degree = 6;
        c.require_connected = true;
        c.require_bridgeless = true;
        c.require_planar = true;
        c.forbid = {{2, 5}};

        std::mutex mu;
        auto visitor = [&](const Graph& g) {
            HypothesisFlags f = hypothesis_class(g);
            const std::array<bool, 4> present{f.has66_edge, f.has656_path,
                                              f.has646_path, f.has636_path};
            if (!present[0] && !present[1] && !present[2] && !present[3])
                return;
            auto verdict = turan_verdict(g.order(), g.size());
            std::lock_guard<std::mutex> lock(mu);
            for (int i = 0; i < 4; ++i) {
                if (!present[i]) continue;
                ++rows[i].graphs;
                rows[i].max_edges = std::max(rows[i].max_edges, g.size());
                if (!verdict.satisfied) ++rows[i].bound_violations;
                if (i == 1 && !f.has66_edge) ++rows[i].consequence_violations;
            }
        };

        auto stats = enumerate_graphs(c, visitor, opt);
        report.exhaustive = report.exhaustive && stats.exhaustive;
        for (auto& row : rows) {
            report.total_violations +=
                row.bound_violations + row.consequence_violations;
            report.rows.push_back(row);
        }
    }
    return report;
}

ClaimDegree4Report verify_claim_degree4(int n_max, const EnumerateOptions& opt) {
    if (n_max < 1 || n_max > kMaxVertices)
        throw std::invalid_argument("verify_claim_degree4: bad n_max");
    ClaimDegree4Report report;
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        ClaimDegree4Report::Row row;
        row.n = n;

        EnumerationConstraints c;
        c.n = n;
        c.min_degree = 3;
        c.max_degree = 6;
        c.require_connected = true;
        c.require_bridgeless = true;
        c.require_planar = true;
        c.forbid = {{2, 5}};
        c.forbid_feature = {
            {FeatureSpec::Kind::kl_edge, 6, 6, 0},
            {FeatureSpec::Kind::kls_path, 6, 5, 6},
            {FeatureSpec::Kind::kls_path, 6, 4, 6},
            {FeatureSpec::Kind::kls_path, 6, 3, 6},
        };

        std::mutex mu;
        auto visitor = [&](const Graph& g) {
            auto verdicts = check_claim_degree4(g);
            auto h = degree_histogram(g);
            auto count_of = [&](int d) {
                auto it = h.counts.find(d);
                return it == h.counts.end() ? 0 : it->second;
            };
            bool histogram_ok = count_of(6) <= count_of(3) + count_of(4);
            bool cn_free = degree6_common_neighbor_free(g);
            std::lock_guard<std::mutex> lock(mu);
            ++row.graphs;
            row.degree6_vertices += verdicts.size();
            for (const auto& v : verdicts)
                if (!v.has_low_degree_neighbor) ++row.claim_violations;
            if (!histogram_ok) ++row.histogram_violations;
            if (!cn_free) ++row.common_neighbor_violations;
        };

        auto stats = enumerate_graphs(c, visitor, opt);
        report.exhaustive = report.exhaustive && stats.exhaustive;
        report.total_violations += row.claim_violations +
                                   row.histogram_violations +
                                   row.common_neighbor_violations;
        report.rows.push_back(row);
    }
    return report;
}

SmallNReport verify_small_n_claim(int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_small_n_claim: bad n_max");
    SmallNReport report;
    report.all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        SmallNReport::Row row;
        row.n = n;
        row.planar_max = max_planar_edges(n);
        row.edge_cap = turan_edge_cap(n);
        row.ok = row.planar_max <= row.edge_cap;
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(row);
    }
    report.first_violation_n = 0;
    for (int n = 1; n <= std::max(n_max + 40, 60); ++n) {
        if (max_planar_edges(n) > turan_edge_cap(n)) {
            report.first_violation_n = n;
            break;
        }
    }
    return report;
}

}  // namespace planartu
