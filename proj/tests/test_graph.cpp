#include "doctest.h"

#include "oracles.hpp"
#include "tihany/graph.hpp"
#include "tihany/graph6.hpp"

using namespace tihany;
using namespace oracles;

TEST_CASE("make_graph basics") {
    Graph p3 = Graph::make(3, {{0, 1}, {1, 2}});
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(!p3.adjacent(0, 2));

    Graph k1 = Graph::make(1, {});
    CHECK(k1.n() == 1);
    CHECK(k1.edge_count() == 0);

    Graph c5 = cycle(5);
    CHECK(c5.n() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // duplicate edges collapse
    Graph d = Graph::make(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(d.edge_count() == 1);

    CHECK_THROWS_AS(Graph::make(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::make(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("complement") {
    Graph k3c = complete(3).complement();
    CHECK(k3c.edge_count() == 0);

    // C5 is self-complementary via the isomorphism 0,2,4,1,3
    Graph c5 = cycle(5);
    Graph cc = c5.complement();
    std::vector<int> iso{0, 2, 4, 1, 3};
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(c5.adjacent(u, v) == cc.adjacent(iso[u], iso[v]));

    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(9, 0.4, rng);
        CHECK(g.complement().complement() == g);
    }
}

TEST_CASE("induced subgraph") {
    Graph c5 = cycle(5);
    auto [p3, map] = c5.induced(VertexSet::of(5, {1, 2, 3}));
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(map == std::vector<Vertex>{1, 2, 3});

    auto same = c5.induced(VertexSet::full(5));
    CHECK(same.graph == c5);
}

TEST_CASE("partition_wrt_clique") {
    // C5, K = edge {0,1}: 3 is a common non-neighbor, 2 and 4 are mixed
    // (enumerated directly from the adjacency).
    Graph c5 = cycle(5);
    auto p = partition_wrt_clique(c5, VertexSet::of(5, {0, 1}));
    CHECK(p.c.empty());
    CHECK(p.a == VertexSet::of(5, {3}));
    CHECK(p.m == VertexSet::of(5, {2, 4}));

    auto pk4 = partition_wrt_clique(complete(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(pk4.c == VertexSet::of(4, {3}));
    CHECK(pk4.a.empty());
    CHECK(pk4.m.empty());

    Graph w5 = wheel5();
    auto pw = partition_wrt_clique(w5, VertexSet::of(6, {5}));
    CHECK(pw.c == VertexSet::of(6, {0, 1, 2, 3, 4}));
    CHECK(pw.a.empty());
    CHECK(pw.m.empty());

    CHECK_THROWS_AS(partition_wrt_clique(c5, VertexSet::of(5, {0, 2})), std::invalid_argument);

    // empty clique convention: C(empty) = V
    auto pe = partition_wrt_clique(c5, VertexSet(5));
    CHECK(pe.c == VertexSet::full(5));
    CHECK(pe.a.empty());
    CHECK(pe.m.empty());
}

TEST_CASE("partition property on random graphs") {
    std::mt19937 rng(42);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(10, 0.5, rng);
        // grow a greedy clique
        VertexSet k(10);
        for (int v = 0; v < 10; ++v) {
            bool ok = true;
            k.for_each([&](Vertex u) {
                if (!g.adjacent(u, v)) ok = false;
            });
            if (ok) k.add(v);
        }
        auto p = partition_wrt_clique(g, k);
        CHECK(p.c.size() + p.a.size() + p.m.size() + k.size() == 10);
        CHECK(!(p.c | p.a | p.m).intersects(k));
    }
}

TEST_CASE("graph6 codec") {
    CHECK(graph6_decode("@") == Graph::make(1, {}));
    CHECK(graph6_encode(Graph::make(1, {})) == "@");
    CHECK(graph6_encode(cycle(5)) == "Dhc");  // reference encoder output
    CHECK(graph6_decode("Dhc") == cycle(5));
    CHECK(graph6_decode(">>graph6<<Dhc") == cycle(5));

    CHECK_THROWS_AS(graph6_decode("D"), Graph6Error);     // length mismatch
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);      // empty
    CHECK_THROWS_AS(graph6_decode("Dh\x19"), Graph6Error);  // char out of range
}

TEST_CASE("graph6 roundtrip on random graphs") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> nd(0, 62);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
        Graph g = random_graph(nd(rng), pd(rng), rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    // large-n form
    std::mt19937 rng2(2);
    Graph big = random_graph(100, 0.1, rng2);
    CHECK(graph6_decode(graph6_encode(big)) == big);
}
