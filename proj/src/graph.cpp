#include "planartu/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace planartu {

std::vector<int> set_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(std::popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " out of range for graph on " +
                                std::to_string(n_) + " vertices");
}

Graph Graph::empty(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in 0..64, got " +
                                    std::to_string(n));
    Graph g;
    g.n_ = n;
    return g;
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(u));
        g.check_vertex(u);
        g.check_vertex(v);
        if (!g.adjacent(u, v)) {
            g.adj_[u] |= vertex_bit(v);
            g.adj_[v] |= vertex_bit(u);
            ++g.m_;
        }
    }
    return g;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexSet Graph::common_neighbors(int u, int v) const {
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    check_vertex(u);
    check_vertex(v);
    return adj_[u] & adj_[v];
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v) throw std::invalid_argument("self-loop");
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    if (!g.adjacent(u, v)) {
        g.adj_[u] |= vertex_bit(v);
        g.adj_[v] |= vertex_bit(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    if (g.adjacent(u, v)) {
        g.adj_[u] &= ~vertex_bit(v);
        g.adj_[v] &= ~vertex_bit(u);
        --g.m_;
    }
    return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
    if (n_ >= kMaxVertices) throw std::invalid_argument("vertex capacity exceeded");
    if (nbrs & ~vertex_mask())
        throw std::invalid_argument("with_vertex: neighbor outside graph");
    Graph g = *this;
    int v = g.n_++;
    g.adj_[v] = nbrs;
    while (nbrs) {
        g.adj_[first_vertex(nbrs)] |= vertex_bit(v);
        nbrs &= nbrs - 1;
    }
    g.m_ += std::popcount(g.adj_[v]);
    return g;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    Graph g;
    g.n_ = n_ - 1;
    VertexSet low = vertex_bit(v) - 1;  // vertices below v keep their index
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        VertexSet row = adj_[u] & ~vertex_bit(v);
        VertexSet packed = (row & low) | ((row >> 1) & ~low);
        g.adj_[u < v ? u : u - 1] = packed;
        g.m_ += std::popcount(packed);
    }
    g.m_ /= 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[u] & ~((vertex_bit(u) << 1) - 1);
        while (higher) {
            out.emplace_back(u, first_vertex(higher));
            higher &= higher - 1;
        }
    }
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_ || m_ != o.m_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram h;
    if (g.order() == 0) return h;
    h.min_degree = kMaxVertices;
    h.max_degree = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        ++h.counts[d];
        h.min_degree = std::min(h.min_degree, d);
        h.max_degree = std::max(h.max_degree, d);
    }
    return h;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("is_connected: graph has no vertices");
    VertexSet seen = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            next |= g.neighbors_unchecked(first_vertex(frontier));
            frontier &= frontier - 1;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

namespace {

struct BridgeDfs {
    const Graph& g;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    int tick = 0;
    std::vector<std::pair<int, int>>* out = nullptr;  // null: existence only
    bool found = false;

    explicit BridgeDfs(const Graph& gr) : g(gr) { disc.fill(-1); }

    void run(int v, int parent) {
        disc[v] = low[v] = tick++;
        VertexSet nbrs = g.neighbors_unchecked(v);
        bool parent_skipped = false;
        while (nbrs) {
            int w = first_vertex(nbrs);
            nbrs &= nbrs - 1;
            if (w == parent && !parent_skipped) {
                parent_skipped = true;  // simple graph: one parent edge
                continue;
            }
            if (disc[w] < 0) {
                run(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) {
                    found = true;
                    if (out) out->emplace_back(std::min(v, w), std::max(v, w));
                }
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    BridgeDfs dfs(g);
    dfs.out = &out;
    for (int v = 0; v < g.order(); ++v)
        if (dfs.disc[v] < 0) dfs.run(v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

bool has_bridge(const Graph& g) {
    BridgeDfs dfs(g);
    for (int v = 0; v < g.order(); ++v) {
        if (dfs.disc[v] < 0) dfs.run(v, -1);
        if (dfs.found) return true;
    }
    return false;
}

int edges_between(const Graph& g, VertexSet s, VertexSet t) {
    if (s & t) throw std::invalid_argument("edges_between: sets overlap");
    int count = 0;
    VertexSet rest = s & g.vertex_mask();
    while (rest) {
        count += std::popcount(g.neighbors_unchecked(first_vertex(rest)) & t);
        rest &= rest - 1;
    }
    return count;
}

}  // namespace planartu
