#include "planartu/structure.hpp"

namespace planartu {

std::string FeatureSpec::describe() const {
    if (kind == Kind::kl_edge)
        return std::to_string(k) + "-" + std::to_string(l) + " edge";
    return std::to_string(k) + "-" + std::to_string(l) + "-" +
           std::to_string(s) + " path";
}

namespace {

VertexSet degree_class(const Graph& g, int d) {
    VertexSet out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == d) out |= vertex_bit(v);
    return out;
}

}  // namespace

std::vector<StructuralFeature> find_kl_edges(const Graph& g, int k, int l) {
    std::vector<StructuralFeature> out;
    VertexSet dk = degree_class(g, k);
    VertexSet dl = degree_class(g, l);
    for (auto [u, v] : g.edge_list()) {
        bool match = ((dk >> u) & 1 && (dl >> v) & 1) ||
                     ((dl >> u) & 1 && (dk >> v) & 1);
        if (match)
            out.push_back({{FeatureSpec::Kind::kl_edge, k, l, 0}, {u, v, -1}});
    }
    return out;
}

std::vector<StructuralFeature> find_kls_paths(const Graph& g, int k, int l,
                                              int s) {
    std::vector<StructuralFeature> out;
    VertexSet dk = degree_class(g, k);
    VertexSet dl = degree_class(g, l);
    VertexSet ds = degree_class(g, s);
    VertexSet mids = dl;
    while (mids) {
        int v = first_vertex(mids);
        mids &= mids - 1;
        VertexSet from = g.neighbors_unchecked(v) & dk;
        VertexSet to = g.neighbors_unchecked(v) & ds;
        VertexSet f = from;
        while (f) {
            int u = first_vertex(f);
            f &= f - 1;
            VertexSet t = to & ~vertex_bit(u);
            if (k == s) t &= ~(vertex_bit(u) | (vertex_bit(u) - 1));  // u < w
            while (t) {
                int w = first_vertex(t);
                t &= t - 1;
                out.push_back(
                    {{FeatureSpec::Kind::kls_path, k, l, s}, {u, v, w}});
            }
        }
    }
    return out;
}

bool has_kl_edge(const Graph& g, int k, int l) {
    VertexSet dk = degree_class(g, k);
    VertexSet dl = degree_class(g, l);
    VertexSet rest = dk;
    while (rest) {
        int u = first_vertex(rest);
        rest &= rest - 1;
        if (g.neighbors_unchecked(u) & dl) return true;
    }
    return false;
}

bool has_kls_path(const Graph& g, int k, int l, int s) {
    VertexSet dk = degree_class(g, k);
    VertexSet dl = degree_class(g, l);
    VertexSet ds = degree_class(g, s);
    VertexSet mids = dl;
    while (mids) {
        int v = first_vertex(mids);
        mids &= mids - 1;
        VertexSet from = g.neighbors_unchecked(v) & dk;
        VertexSet to = g.neighbors_unchecked(v) & ds;
        if (!from || !to) continue;
        if (k == s) {
            if (set_size(from) >= 2) return true;
        } else {
            return true;  // k != s: the endpoint sets are disjoint
        }
    }
    return false;
}

bool has_feature(const Graph& g, const FeatureSpec& spec) {
    if (spec.kind == FeatureSpec::Kind::kl_edge)
        return has_kl_edge(g, spec.k, spec.l);
    return has_kls_path(g, spec.k, spec.l, spec.s);
}

bool degree6_set_independent(const Graph& g) { return !has_kl_edge(g, 6, 6); }

bool degree6_common_neighbor_free(const Graph& g) {
    VertexSet six = degree_class(g, 6);
    VertexSet rest = six;
    while (rest) {
        int u = first_vertex(rest);
        rest &= rest - 1;
        VertexSet others = rest;
        while (others) {
            int v = first_vertex(others);
            others &= others - 1;
            if (g.neighbors_unchecked(u) & g.neighbors_unchecked(v))
                return false;
        }
    }
    return true;
}

std::vector<ClaimDegree4Verdict> check_claim_degree4(const Graph& g) {
    std::vector<ClaimDegree4Verdict> out;
    VertexSet low = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 4) low |= vertex_bit(v);
    VertexSet six = degree_class(g, 6);
    while (six) {
        int u = first_vertex(six);
        six &= six - 1;
        out.push_back({u, (g.neighbors_unchecked(u) & low) != 0});
    }
    return out;
}

HypothesisFlags hypothesis_class(const Graph& g) {
    HypothesisFlags f;
    f.has66_edge = has_kl_edge(g, 6, 6);
    f.has656_path = has_kls_path(g, 6, 5, 6);
    f.has646_path = has_kls_path(g, 6, 4, 6);
    f.has636_path = has_kls_path(g, 6, 3, 6);
    f.has33_edge = has_kl_edge(g, 3, 3);
    f.bridgeless = !has_bridge(g);
    auto h = degree_histogram(g);
    f.min_degree_ge3 = g.order() > 0 && h.min_degree >= 3;
    f.max_degree = h.max_degree;
    f.connected = g.order() > 0 && is_connected(g);
    return f;
}

}  // namespace planartu
