#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "planartu/double_star.hpp"
#include "planartu/enumerate.hpp"

using namespace planartu;

namespace {

void check_witness(const Graph& g, const DoubleStarWitness& w, int m, int n) {
    CHECK(g.adjacent(w.backbone_u, w.backbone_v));
    CHECK(set_size(w.leaves_u) == m);
    CHECK(set_size(w.leaves_v) == n);
    CHECK((w.leaves_u & w.leaves_v) == 0);
    VertexSet ends = vertex_bit(w.backbone_u) | vertex_bit(w.backbone_v);
    CHECK((w.leaves_u & ends) == 0);
    CHECK((w.leaves_v & ends) == 0);
    CHECK((w.leaves_u & ~g.neighbors(w.backbone_u)) == 0);
    CHECK((w.leaves_v & ~g.neighbors(w.backbone_v)) == 0);
}

const std::pair<int, int> kPatterns[] = {{1, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}};

}  // namespace

TEST_CASE("per-edge examples") {
    Graph p3 = corpus::path(3);
    CHECK_FALSE(double_star_at_edge(p3, 0, 1, 1, 1).has_value());

    Graph star = corpus::star(7);
    // center 0 as the high side, leaf 1 as the low side: no spare neighbors
    CHECK_FALSE(double_star_at_edge(star, 0, 1, 5, 2).has_value());

    Graph icosa = build_icosahedron();
    for (auto [u, v] : icosa.edge_list()) {
        CHECK_FALSE(double_star_at_edge(icosa, u, v, 2, 5).has_value());
        CHECK_FALSE(double_star_at_edge(icosa, v, u, 2, 5).has_value());
    }

    CHECK_THROWS_AS(double_star_at_edge(p3, 0, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(double_star_at_edge(p3, 0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("containment examples") {
    CHECK_FALSE(contains_double_star(build_icosahedron(), 2, 5).has_value());
    CHECK_FALSE(contains_double_star(corpus::complete(7), 2, 5).has_value());
    CHECK_FALSE(oracles::contains_double_star_subsets(corpus::complete(7), 2, 5));

    // d(v) >= 8 with min degree 3 always yields S_{2,5}
    std::mt19937_64 rng(31);
    int found = 0;
    while (found < 50) {
        Graph g = corpus::random_graph(rng, 10 + static_cast<int>(rng() % 3),
                                       0.55);
        auto h = degree_histogram(g);
        if (h.min_degree < 3 || h.max_degree < 8) continue;
        ++found;
        auto w = contains_double_star(g, 2, 5);
        REQUIRE(w.has_value());
        check_witness(g, *w, 2, 5);
    }
}

TEST_CASE("deterministic witness selection") {
    // 0 adjacent to 1..8; vertex 1 also adjacent to 9 and 10
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 8; ++i) edges.emplace_back(0, i);
    edges.emplace_back(1, 9);
    edges.emplace_back(1, 10);
    Graph g = Graph::build(11, edges);
    auto w = contains_double_star(g, 2, 5);
    REQUIRE(w.has_value());
    CHECK(w->backbone_u == 1);
    CHECK(w->backbone_v == 0);
    CHECK(w->leaves_u == (vertex_bit(9) | vertex_bit(10)));
    CHECK(w->leaves_v == (vertex_bit(2) | vertex_bit(3) | vertex_bit(4) |
                          vertex_bit(5) | vertex_bit(6)));
}

TEST_CASE("oracle equivalence on a random corpus") {
    auto graphs = corpus::random_corpus(800, 9, 1001);
    for (const auto& g : graphs) {
        for (auto [m, n] : kPatterns) {
            auto w = contains_double_star(g, m, n);
            CHECK(w.has_value() == oracles::contains_double_star_subsets(g, m, n));
            CHECK(w.has_value() == contains_double_star_fast(g, m, n));
            if (w) check_witness(g, *w, m, n);
        }
    }
}

TEST_CASE("subset oracle agrees with the two-sided oracle") {
    auto graphs = corpus::random_corpus(200, 8, 1002);
    for (const auto& g : graphs)
        for (auto [m, n] : kPatterns)
            CHECK(oracles::contains_double_star_subsets(g, m, n) ==
                  oracles::contains_double_star_full(g, m, n));
}

TEST_CASE("monotone under edge addition") {
    auto graphs = corpus::random_corpus(300, 9, 1003);
    for (const auto& g : graphs) {
        if (g.order() < 2) continue;
        if (!contains_double_star(g, 2, 3)) continue;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                CHECK(contains_double_star(g.with_edge(u, v), 2, 3).has_value());
    }
}

TEST_CASE("max degree 5 rules out S_{2,5}") {
    for (const auto& g : corpus::random_corpus(400, 9, 1004)) {
        if (g.order() == 0) continue;
        if (degree_histogram(g).max_degree <= 5)
            CHECK_FALSE(contains_double_star(g, 2, 5).has_value());
    }
}

TEST_CASE("triangle bounds on a constructed 6-5 edge") {
    // u of degree 6, v of degree 5, three shared neighbors
    Graph g = Graph::build(10, {{0, 1},
                                {0, 2}, {1, 2},
                                {0, 3}, {1, 3},
                                {0, 4}, {1, 4},
                                {0, 5}, {0, 6},   // exclusive to u
                                {1, 7}});          // exclusive to v
    CHECK(g.degree(0) == 6);
    CHECK(g.degree(1) == 5);
    CHECK_FALSE(contains_double_star(g, 2, 5).has_value());
    auto tb = triangles_on_edge_bounds(g, 0, 1);
    CHECK(tb.triangles == 3);
    CHECK_FALSE(tb.s25_forcing);

    // removing a shared neighbor drops to 2 triangles and forces S_{2,5}
    Graph h = g.without_edge(1, 4).with_edge(1, 8);
    auto tb2 = triangles_on_edge_bounds(h, 0, 1);
    CHECK(tb2.triangles == 2);
    CHECK(tb2.s25_forcing);
    CHECK(contains_double_star(h, 2, 5).has_value());

    CHECK_THROWS_AS(triangles_on_edge_bounds(g, 2, 3), std::invalid_argument);
}

TEST_CASE("triangle windows in S_{2,5}-free graphs") {
    // every 6-5 edge sits on 3-4 triangles, 6-4 on 2-3, 6-3 on 1-2
    int seen65 = 0, seen64 = 0, seen63 = 0;
    for (const auto& g : corpus::random_corpus(3000, 9, 1005)) {
        if (contains_double_star_fast(g, 2, 5)) continue;
        for (auto [u, v] : g.edge_list()) {
            int du = g.degree(u), dv = g.degree(v);
            int hi = std::max(du, dv), lo = std::min(du, dv);
            if (hi != 6) continue;
            int t = set_size(g.common_neighbors(u, v));
            if (lo == 5) {
                ++seen65;
                CHECK((t == 3 || t == 4));
            } else if (lo == 4) {
                ++seen64;
                CHECK((t == 2 || t == 3));
            } else if (lo == 3) {
                ++seen63;
                CHECK((t == 1 || t == 2));
            }
        }
    }
    CHECK(seen65 > 0);
    CHECK(seen64 > 0);
    CHECK(seen63 > 0);
}
