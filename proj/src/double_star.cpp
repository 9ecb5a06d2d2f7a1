#include "planartu/double_star.hpp"

#include <stdexcept>

namespace planartu {

namespace {

inline bool feasible(const Graph& g, int u, int v, int m, int n) {
    VertexSet a = g.neighbors_unchecked(u) & ~vertex_bit(v);
    VertexSet b = g.neighbors_unchecked(v) & ~vertex_bit(u);
    return set_size(a) >= m && set_size(b) >= n && set_size(a | b) >= m + n;
}

// Lowest-index-first leaf selection, exclusive neighbors before shared ones.
VertexSet pick(VertexSet exclusive, VertexSet shared, int want) {
    VertexSet out = 0;
    while (want > 0 && exclusive) {
        out |= vertex_bit(first_vertex(exclusive));
        exclusive &= exclusive - 1;
        --want;
    }
    while (want > 0) {
        out |= vertex_bit(first_vertex(shared));
        shared &= shared - 1;
        --want;
    }
    return out;
}

}  // namespace

std::optional<DoubleStarWitness> double_star_at_edge(const Graph& g, int u,
                                                     int v, int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("double star pattern needs m, n >= 1");
    if (u == v || !g.adjacent(u, v))
        throw std::invalid_argument("double_star_at_edge: uv is not an edge");
    if (!feasible(g, u, v, m, n)) return std::nullopt;
    VertexSet a = g.neighbors_unchecked(u) & ~vertex_bit(v);
    VertexSet b = g.neighbors_unchecked(v) & ~vertex_bit(u);
    DoubleStarWitness w;
    w.backbone_u = u;
    w.backbone_v = v;
    w.leaves_u = pick(a & ~b, a & b, m);
    w.leaves_v = pick(b & ~a, (a & b) & ~w.leaves_u, n);
    return w;
}

std::optional<DoubleStarWitness> contains_double_star(const Graph& g, int m,
                                                      int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("double star pattern needs m, n >= 1");
    for (auto [u, v] : g.edge_list()) {
        if (feasible(g, u, v, m, n)) return double_star_at_edge(g, u, v, m, n);
        if (feasible(g, v, u, m, n)) return double_star_at_edge(g, v, u, m, n);
    }
    return std::nullopt;
}

bool contains_double_star_fast(const Graph& g, int m, int n) {
    for (int u = 0; u < g.order(); ++u) {
        VertexSet higher = g.neighbors_unchecked(u) & ~((vertex_bit(u) << 1) - 1);
        while (higher) {
            int v = first_vertex(higher);
            higher &= higher - 1;
            if (feasible(g, u, v, m, n) || feasible(g, v, u, m, n)) return true;
        }
    }
    return false;
}

TriangleEdgeBounds triangles_on_edge_bounds(const Graph& g, int u, int v) {
    if (u == v || !g.adjacent(u, v))
        throw std::invalid_argument("triangles_on_edge_bounds: uv is not an edge");
    TriangleEdgeBounds out;
    out.triangles = set_size(g.common_neighbors(u, v));
    out.s25_forcing = feasible(g, u, v, 2, 5) || feasible(g, v, u, 2, 5);
    return out;
}

}  // namespace planartu
