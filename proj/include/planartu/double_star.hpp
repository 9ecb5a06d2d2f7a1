#pragma once

#include <optional>

#include "planartu/graph.hpp"

namespace planartu {

/// Certificate that S_{m,n} is a subgraph: backbone edge (u,v) with m leaves
/// attached at u and n leaves at v, all distinct from each other and from the
/// backbone endpoints.
struct DoubleStarWitness {
    int backbone_u = 0;
    int backbone_v = 0;
    VertexSet leaves_u = 0;
    VertexSet leaves_v = 0;
};

/// Witness for S_{m,n} with backbone uv, m leaves at u, n leaves at v, or
/// nothing. Feasibility is the three-inequality condition
///   |N(u)\{v}| >= m,  |N(v)\{u}| >= n,  |(N(u) ∪ N(v)) \ {u,v}| >= m + n
/// which is equivalent to subset search: exclusive neighbors can always be
/// used first and the shared pool split afterwards.
std::optional<DoubleStarWitness> double_star_at_edge(const Graph& g, int u,
                                                     int v, int m, int n);

/// Some S_{m,n} witness anywhere in g (each edge tried in both orientations),
/// or nothing iff g is S_{m,n}-free.
std::optional<DoubleStarWitness> contains_double_star(const Graph& g, int m,
                                                      int n);

/// Decision-only fast path used by the enumerator's pruning.
bool contains_double_star_fast(const Graph& g, int m, int n);

struct TriangleEdgeBounds {
    int triangles = 0;       // |N(u) ∩ N(v)|
    bool s25_forcing = false;  // edge admits S_{2,5} with backbone uv
};

/// Triangle count on edge uv plus whether the edge alone forces an S_{2,5}
/// (backbone uv in some orientation).
TriangleEdgeBounds triangles_on_edge_bounds(const Graph& g, int u, int v);

}  // namespace planartu
