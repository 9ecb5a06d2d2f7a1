#include "planartu/canonical.hpp"

#include <algorithm>
#include <array>

namespace planartu {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 + bits.size() * 16);
    out.push_back(digits[(n >> 4) & 0xf]);
    out.push_back(digits[n & 0xf]);
    for (std::uint64_t w : bits)
        for (int shift = 60; shift >= 0; shift -= 4)
            out.push_back(digits[(w >> shift) & 0xf]);
    return out;
}

namespace {

// Ordered partition of V as a list of cells. Cell order is derived from
// structure only (split groups sorted by neighbor count), so it is invariant
// under relabeling.
using Partition = std::vector<VertexSet>;

void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
            VertexSet splitter = cells[si];
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                VertexSet cell = cells[ci];
                if (std::popcount(cell) <= 1) continue;
                std::array<VertexSet, kMaxVertices + 1> groups{};
                int seen_counts = 0;
                VertexSet rest = cell;
                while (rest) {
                    int v = first_vertex(rest);
                    rest &= rest - 1;
                    int k = std::popcount(g.neighbors_unchecked(v) & splitter);
                    if (!groups[k]) ++seen_counts;
                    groups[k] |= vertex_bit(v);
                }
                if (seen_counts <= 1) continue;
                Partition next;
                next.reserve(cells.size() + seen_counts - 1);
                next.insert(next.end(), cells.begin(), cells.begin() + ci);
                for (int k = 0; k <= kMaxVertices; ++k)
                    if (groups[k]) next.push_back(groups[k]);
                next.insert(next.end(), cells.begin() + ci + 1, cells.end());
                cells = std::move(next);
                changed = true;
                break;
            }
        }
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    bool have_best = false;
    std::vector<std::uint64_t> best;
    std::vector<int> best_order;
    // Automorphisms discovered at leaves with encodings equal to the best.
    std::vector<std::vector<int>> generators;

    explicit CanonSearch(const Graph& gr) : g(gr), n(gr.order()) {}

    std::vector<std::uint64_t> encode(const std::vector<int>& order) const {
        int nbits = n * (n - 1) / 2;
        std::vector<std::uint64_t> out((nbits + 63) / 64, 0);
        int p = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++p)
                if (g.adjacent(order[i], order[j]))
                    out[p >> 6] |= std::uint64_t{1} << (63 - (p & 63));
        return out;
    }

    void leaf(const Partition& cells) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = first_vertex(cells[i]);
        auto enc = encode(order);
        if (!have_best || enc < best) {
            best = std::move(enc);
            best_order = std::move(order);
            have_best = true;
        } else if (enc == best) {
            std::vector<int> sigma(n);
            for (int i = 0; i < n; ++i) sigma[best_order[i]] = order[i];
            generators.push_back(std::move(sigma));
        }
    }

    // Orbit pruning: skip v if some discovered automorphism fixing the
    // individualized prefix pointwise maps an already-tried vertex to v.
    bool in_tried_orbit(int v, const std::vector<int>& tried,
                        const std::vector<int>& prefix) const {
        if (tried.empty() || generators.empty()) return false;
        std::array<int, kMaxVertices> parent;
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& sigma : generators) {
            bool fixes = true;
            for (int p : prefix)
                if (sigma[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n; ++x) {
                int a = find(x), b = find(sigma[x]);
                if (a != b) parent[a] = b;
            }
        }
        int fv = find(v);
        for (int t : tried)
            if (find(t) == fv) return true;
        return false;
    }

    void search(Partition cells, std::vector<int>& prefix) {
        refine(g, cells);
        std::size_t target = cells.size();
        int target_size = kMaxVertices + 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            int sz = std::popcount(cells[i]);
            if (sz > 1 && sz < target_size) {
                target = i;
                target_size = sz;
            }
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        VertexSet rest = cells[target];
        while (rest) {
            int v = first_vertex(rest);
            rest &= rest - 1;
            if (in_tried_orbit(v, tried, prefix)) continue;
            Partition child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + target);
            child.push_back(vertex_bit(v));
            child.push_back(cells[target] & ~vertex_bit(v));
            child.insert(child.end(), cells.begin() + target + 1, cells.end());
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
            tried.push_back(v);
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    CanonicalLabeling out;
    out.form.n = g.order();
    if (g.order() == 0) return out;
    if (g.order() == 1) {
        out.order = {0};
        return out;
    }
    CanonSearch search(g);
    Partition start = {g.vertex_mask()};
    std::vector<int> prefix;
    search.search(std::move(start), prefix);
    out.form.bits = std::move(search.best);
    out.order = std::move(search.best_order);
    return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_relabel(const Graph& g) {
    auto lab = canonical_labeling(g);
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[lab.order[i]] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edge_list()) edges.emplace_back(pos[u], pos[v]);
    return Graph::build(g.order(), edges);
}

}  // namespace planartu
