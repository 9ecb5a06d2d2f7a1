#include "planartu/planarity.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>

namespace planartu {

EulerVerdict euler_prefilter(const Graph& g) {
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6)
        return EulerVerdict::definitely_nonplanar;
    return EulerVerdict::unknown;
}

namespace {

// Left-right planarity test (Brandes' formulation of de Fraysseix-Rosenstiehl).
// Runs only on graphs that already pass the Euler bound, so the number of
// oriented edges is at most 3n - 6 <= 186.
constexpr int kNone = -1;
constexpr int kMaxEdges = 3 * kMaxVertices;

struct Interval {
    std::int16_t lo = kNone;
    std::int16_t hi = kNone;
    bool empty() const { return lo == kNone && hi == kNone; }
};

struct ConflictPair {
    Interval left, right;
};

struct LeftRightTest {
    const Graph& g;
    int n;
    int ecount = 0;

    std::array<std::int16_t, kMaxEdges> esrc{}, edst{}, lowpt{}, lowpt2{},
        nest{}, eref{}, lowpt_edge{}, stack_bottom{};
    std::array<std::int16_t, kMaxVertices> height{}, parent_edge{};
    std::array<std::int16_t, kMaxVertices * kMaxVertices> eid{};
    std::array<std::int16_t, kMaxEdges> adj_edges{};
    std::array<std::int16_t, kMaxVertices + 1> adj_start{};
    std::array<ConflictPair, kMaxEdges + 1> stack{};
    int top = 0;

    explicit LeftRightTest(const Graph& graph) : g(graph), n(graph.order()) {
        for (int i = 0; i < n * n; ++i) eid[i] = kNone;
        for (int v = 0; v < n; ++v) {
            height[v] = kNone;
            parent_edge[v] = kNone;
        }
        eref.fill(kNone);
        lowpt_edge.fill(kNone);
    }

    void orient(int v) {
        int e = parent_edge[v];
        VertexSet nbrs = g.neighbors_unchecked(v);
        while (nbrs) {
            int w = first_vertex(nbrs);
            nbrs &= nbrs - 1;
            if (eid[v * n + w] != kNone || eid[w * n + v] != kNone) continue;
            int vw = ecount++;
            eid[v * n + w] = static_cast<std::int16_t>(vw);
            esrc[vw] = static_cast<std::int16_t>(v);
            edst[vw] = static_cast<std::int16_t>(w);
            lowpt[vw] = height[v];
            lowpt2[vw] = height[v];
            if (height[w] == kNone) {  // tree edge
                parent_edge[w] = static_cast<std::int16_t>(vw);
                height[w] = static_cast<std::int16_t>(height[v] + 1);
                orient(w);
            } else {  // back edge
                lowpt[vw] = height[w];
            }
            nest[vw] = static_cast<std::int16_t>(2 * lowpt[vw]);
            if (lowpt2[vw] < height[v]) ++nest[vw];  // chordal adjustment
            if (e != kNone) {
                if (lowpt[vw] < lowpt[e]) {
                    lowpt2[e] = std::min(lowpt[e], lowpt2[vw]);
                    lowpt[e] = lowpt[vw];
                } else if (lowpt[vw] > lowpt[e]) {
                    lowpt2[e] = std::min(lowpt2[e], lowpt[vw]);
                } else {
                    lowpt2[e] = std::min(lowpt2[e], lowpt2[vw]);
                }
            }
        }
    }

    void build_ordered_adjacency() {
        std::array<std::int16_t, kMaxVertices> count{};
        for (int e = 0; e < ecount; ++e) ++count[esrc[e]];
        adj_start[0] = 0;
        for (int v = 0; v < n; ++v)
            adj_start[v + 1] = static_cast<std::int16_t>(adj_start[v] + count[v]);
        std::array<std::int16_t, kMaxVertices> fill{};
        for (int e = 0; e < ecount; ++e) {
            int v = esrc[e];
            adj_edges[adj_start[v] + fill[v]++] = static_cast<std::int16_t>(e);
        }
        for (int v = 0; v < n; ++v)
            std::sort(adj_edges.begin() + adj_start[v],
                      adj_edges.begin() + adj_start[v + 1],
                      [&](int a, int b) { return nest[a] < nest[b]; });
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt[i.hi] > lowpt[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) return lowpt[p.right.lo];
        if (p.right.empty()) return lowpt[p.left.lo];
        return std::min(lowpt[p.left.lo], lowpt[p.right.lo]);
    }

    void set_ref(int key, int value) {
        if (key != kNone) eref[key] = static_cast<std::int16_t>(value);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        // merge return edges of ei into p.right
        while (true) {
            assert(top > stack_bottom[ei]);
            ConflictPair q = stack[--top];
            if (!q.left.empty()) std::swap(q.left, q.right);
            if (!q.left.empty()) return false;  // not planar
            assert(q.right.lo != kNone);
            if (lowpt[q.right.lo] > lowpt[e]) {
                if (p.right.empty())
                    p.right.hi = q.right.hi;
                else
                    set_ref(p.right.lo, q.right.hi);
                p.right.lo = q.right.lo;
            } else {  // align
                set_ref(q.right.lo, lowpt_edge[e]);
            }
            if (top == stack_bottom[ei]) break;
        }
        // merge conflicting return edges of earlier siblings into p.left
        while (top > 0 && (conflicting(stack[top - 1].left, ei) ||
                           conflicting(stack[top - 1].right, ei))) {
            ConflictPair q = stack[--top];
            if (conflicting(q.right, ei)) std::swap(q.left, q.right);
            if (conflicting(q.right, ei)) return false;  // not planar
            set_ref(p.right.lo, q.right.hi);
            if (q.right.lo != kNone) p.right.lo = q.right.lo;
            if (p.left.empty())
                p.left.hi = q.left.hi;
            else
                set_ref(p.left.lo, q.left.hi);
            p.left.lo = q.left.lo;
        }
        if (!(p.left.empty() && p.right.empty())) stack[top++] = p;
        return true;
    }

    void trim_back_edges(int u) {
        // drop conflict pairs whose returns all end at u
        while (top > 0 && lowest(stack[top - 1]) == height[u]) --top;
        if (top > 0) {
            ConflictPair p = stack[--top];
            while (p.left.hi != kNone && edst[p.left.hi] == u)
                p.left.hi = eref[p.left.hi];
            if (p.left.hi == kNone && p.left.lo != kNone) {
                set_ref(p.left.lo, p.right.lo);
                p.left.lo = kNone;
            }
            while (p.right.hi != kNone && edst[p.right.hi] == u)
                p.right.hi = eref[p.right.hi];
            if (p.right.hi == kNone && p.right.lo != kNone) {
                set_ref(p.right.lo, p.left.lo);
                p.right.lo = kNone;
            }
            stack[top++] = p;
        }
    }

    bool test(int v) {
        int e = parent_edge[v];
        for (int idx = adj_start[v]; idx < adj_start[v + 1]; ++idx) {
            int ei = adj_edges[idx];
            stack_bottom[ei] = static_cast<std::int16_t>(top);
            int w = edst[ei];
            if (ei == parent_edge[w]) {  // tree edge
                if (!test(w)) return false;
            } else {  // back edge
                lowpt_edge[ei] = static_cast<std::int16_t>(ei);
                ConflictPair p;
                p.right.lo = p.right.hi = static_cast<std::int16_t>(ei);
                stack[top++] = p;
            }
            if (lowpt[ei] < height[v]) {  // ei has a return edge
                if (idx == adj_start[v]) {
                    assert(e != kNone);
                    lowpt_edge[e] = lowpt_edge[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
        }
        if (e != kNone) trim_back_edges(esrc[e]);
        return true;
    }

    bool run() {
        for (int v = 0; v < n; ++v) {
            if (height[v] != kNone) continue;
            height[v] = 0;
            orient(v);
        }
        build_ordered_adjacency();
        for (int v = 0; v < n; ++v)
            if (parent_edge[v] == kNone && !test(v)) return false;
        return true;
    }
};

}  // namespace

bool is_planar(const Graph& g) {
    if (g.order() < 3) return true;
    if (g.size() > 3 * g.order() - 6) return false;
    LeftRightTest lr(g);
    return lr.run();
}

}  // namespace planartu
