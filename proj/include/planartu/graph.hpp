#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace planartu {

// Vertex capacity is one machine word: adjacency rows are single uint64_t
// bitsets and all set operations are branch-free.
inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<int> set_vertices(VertexSet s);

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// All "mutating" operations return a new value.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are de-duplicated;
    /// out-of-range endpoints, self-loops and n > 64 are errors.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph empty(int n);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    VertexSet neighbors(int v) const;
    VertexSet neighbors_unchecked(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertex_mask() const {
        return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
    }

    /// N(u) ∩ N(v); for an edge uv this is the set of triangles sitting on it.
    VertexSet common_neighbors(int u, int v) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Appends vertex n adjacent to the vertices of `nbrs`.
    Graph with_vertex(VertexSet nbrs) const;
    /// Removes v and compacts indices above it down by one.
    Graph delete_vertex(int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph& o) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};

    void check_vertex(int v) const;
};

struct DegreeHistogram {
    std::map<int, int> counts;  // degree -> number of vertices
    int min_degree = 0;
    int max_degree = 0;
};

DegreeHistogram degree_histogram(const Graph& g);

/// True iff g has exactly one connected component. Errors on the empty graph.
bool is_connected(const Graph& g);

/// All cut edges, as (u,v) pairs with u < v, sorted.
std::vector<std::pair<int, int>> bridges(const Graph& g);
bool has_bridge(const Graph& g);

/// Number of edges with one endpoint in s and the other in t; s, t disjoint.
int edges_between(const Graph& g, VertexSet s, VertexSet t);

}  // namespace planartu
