#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "planartu/enumerate.hpp"
#include "planartu/graph6.hpp"

using namespace planartu;

TEST_CASE("known encodings") {
    CHECK(graph6_encode(corpus::complete(4)) == "C~");
    CHECK(graph6_encode(Graph::empty(1)) == "@");
    CHECK(graph6_encode(corpus::triangle()) == "Bw");
    CHECK(graph6_encode(corpus::complete(5)) == "D~{");
    CHECK(graph6_encode(corpus::cycle(5)) == "Dhc");
    CHECK(graph6_encode(corpus::complete_bipartite(3, 3)) == "EFz_");
    CHECK(graph6_encode(Graph::empty(5)) == "D??");
}

TEST_CASE("known decodings") {
    Graph k4 = graph6_decode("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(k4.adjacent(i, j));

    Graph one = graph6_decode("@");
    CHECK(one.order() == 1);
    CHECK(one.size() == 0);

    CHECK(graph6_decode(">>graph6<<C~").size() == 6);  // optional prefix
}

TEST_CASE("icosahedron round trip is identical") {
    Graph icosa = build_icosahedron();
    Graph back = graph6_decode(graph6_encode(icosa));
    CHECK(back == icosa);
}

TEST_CASE("round trip over the random corpus") {
    for (const auto& g : corpus::random_corpus(1000, 20, 606))
        CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("long size header for 63 and 64 vertices") {
    std::mt19937_64 rng(607);
    for (int n : {62, 63, 64}) {
        Graph g = corpus::random_graph(rng, n, 0.2);
        std::string text = graph6_encode(g);
        if (n <= 62)
            CHECK(text[0] != '~');
        else
            CHECK(text[0] == '~');
        CHECK(graph6_decode(text) == g);
    }
}

TEST_CASE("decode error taxonomy") {
    auto kind_of = [](const std::string& line) {
        try {
            graph6_decode(line);
        } catch (const Graph6Error& e) {
            return e.kind;
        }
        FAIL("expected a decode error for: " << line);
        return Graph6Error::Kind::malformed_header;
    };

    CHECK(kind_of("") == Graph6Error::Kind::malformed_header);
    CHECK(kind_of("~A") == Graph6Error::Kind::malformed_header);
    CHECK(kind_of("C") == Graph6Error::Kind::truncated);
    CHECK(kind_of("Dhc?") == Graph6Error::Kind::trailing_garbage);
    CHECK(kind_of("C~~") == Graph6Error::Kind::trailing_garbage);
    CHECK(kind_of(std::string("C") + char(17)) == Graph6Error::Kind::bad_character);
    CHECK(kind_of("~~????") == Graph6Error::Kind::capacity);
    // n = 65 > capacity: header '~' then 65 in three 6-bit chunks
    std::string big = "~";
    big += char(63 + 0);
    big += char(63 + 1);
    big += char(63 + 1);
    CHECK(kind_of(big) == Graph6Error::Kind::capacity);
    // triangle on 3 vertices needs 1 data byte; set a padding bit
    CHECK(kind_of("Bq") == Graph6Error::Kind::nonzero_padding);
}

TEST_CASE("encoding is per-labeling, decode restores adjacency exactly") {
    Graph p4 = corpus::path(4);
    Graph relabeled = Graph::build(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(graph6_encode(p4) != graph6_encode(relabeled));
    CHECK(graph6_decode(graph6_encode(relabeled)) == relabeled);
}
