#include "doctest.h"

#include "oracles.hpp"
#include "tihany/analysis.hpp"

using namespace tihany;
using namespace oracles;

TEST_CASE("find_claw") {
    CHECK(!find_claw(wheel5()).has_value());
    CHECK(!find_claw(icosahedron()).has_value());
    CHECK(!find_claw(cycle(7)).has_value());

    auto c = find_claw(claw());
    REQUIRE(c.has_value());
    CHECK(c->center == 0);
    CHECK(c->leaves == VertexSet::of(4, {1, 2, 3}));

    // every Petersen vertex's neighborhood is a triad
    auto p = find_claw(petersen());
    REQUIRE(p.has_value());
    CHECK(p->center == 0);
    CHECK(p->leaves == petersen().neighbors(0));
}

TEST_CASE("enumerate_triads") {
    CHECK(enumerate_triads(cycle(5)).empty());  // alpha(C5) = 2
    CHECK(enumerate_triads(complete(6)).empty());

    auto t = enumerate_triads(claw());
    REQUIRE(t.size() == 1);
    CHECK(t[0] == VertexSet::of(4, {1, 2, 3}));

    auto p5 = enumerate_triads(path(5));
    REQUIRE(p5.size() == 1);
    CHECK(p5[0] == VertexSet::of(5, {0, 2, 4}));

    for (auto& triad : enumerate_triads(petersen())) {
        CHECK(triad.size() == 3);
        CHECK(petersen().is_stable(triad));
    }
}

TEST_CASE("set_shape") {
    Graph k4 = complete(4);
    auto full = set_shape(k4, VertexSet::full(4));
    CHECK(full.is_clique);
    CHECK(!full.is_stable);
    CHECK(full.is_antimatching);
    CHECK(full.is_cobipartite);

    // C4: perfect antimatching, splits into two opposite edges
    auto c4 = set_shape(cycle(4), VertexSet::full(4));
    CHECK(!c4.is_clique);
    CHECK(c4.is_antimatching);
    CHECK(c4.is_cobipartite);

    // C5: two non-neighbors per vertex, complement is an odd cycle
    auto c5 = set_shape(cycle(5), VertexSet::full(5));
    CHECK(!c5.is_antimatching);
    CHECK(!c5.is_cobipartite);

    auto pair = set_shape(cycle(5), VertexSet::of(5, {1, 3}));
    CHECK(pair.is_stable);
    CHECK(pair.is_antimatching);
    CHECK(pair.is_cobipartite);
}

namespace {

// direct restatement of the 4-set condition, for cross-checking
bool brute_antiprismatic(const Graph& g) {
    int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int vs[4] = {a, b, c, d};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(vs[i], vs[j])) ++edges;
                    if (edges < 2) return false;
                    for (int i = 0; i < 4; ++i) {
                        int deg = 0, leaf_edges = 0;
                        for (int j = 0; j < 4; ++j) {
                            if (j == i) continue;
                            if (g.adjacent(vs[i], vs[j])) ++deg;
                            for (int l = j + 1; l < 4; ++l)
                                if (l != i && g.adjacent(vs[j], vs[l])) ++leaf_edges;
                        }
                        if (deg == 3 && leaf_edges == 0) return false;
                    }
                }
    return true;
}

void check_embedding(const Graph& g, const Graph& pat, const std::vector<Vertex>& map) {
    REQUIRE(int(map.size()) == pat.n());
    for (int i = 0; i < pat.n(); ++i)
        for (int j = i + 1; j < pat.n(); ++j)
            CHECK(pat.adjacent(i, j) == g.adjacent(map[i], map[j]));
}

}  // namespace

TEST_CASE("is_antiprismatic") {
    CHECK(is_antiprismatic(cycle(5), PrismMode::Antiprismatic).holds);
    CHECK(is_antiprismatic(cycle(5), PrismMode::Prismatic).holds);  // self-complementary
    CHECK(is_antiprismatic(wheel5(), PrismMode::Antiprismatic).holds);

    auto cw = is_antiprismatic(claw(), PrismMode::Antiprismatic);
    CHECK(!cw.holds);
    CHECK(cw.witness == VertexSet::full(4));

    CHECK(!is_antiprismatic(petersen(), PrismMode::Antiprismatic).holds);
    CHECK(!is_antiprismatic(complete(4), PrismMode::Prismatic).holds);

    Graph rot = rotator_graph();
    CHECK(is_antiprismatic(rot, PrismMode::Prismatic).holds);
    CHECK(!is_antiprismatic(rot, PrismMode::Antiprismatic).holds);
    CHECK(is_antiprismatic(twister_graph(), PrismMode::Prismatic).holds);

    std::mt19937 rng(21);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(8, 0.5, rng);
        CHECK(is_antiprismatic(g, PrismMode::Antiprismatic).holds == brute_antiprismatic(g));
        CHECK(is_antiprismatic(g, PrismMode::Prismatic).holds == brute_antiprismatic(g.complement()));
    }
}

TEST_CASE("rotator and twister patterns") {
    Graph rot = rotator_graph();
    CHECK(rot.n() == 9);
    CHECK(rot.edge_count() == 18);
    Graph tw = twister_graph();
    CHECK(tw.n() == 10);
    CHECK(tw.edge_count() == 21);
    for (int v = 0; v < 8; ++v) CHECK(tw.degree(v) == 4);
    CHECK(tw.degree(8) == 5);
    CHECK(tw.degree(9) == 5);
}

TEST_CASE("is_orientable_prismatic") {
    CHECK(is_orientable_prismatic(cycle(5)).orientable);

    Graph rot = rotator_graph();
    auto r = is_orientable_prismatic(rot);
    CHECK(!r.orientable);
    CHECK(!r.witness_is_twister);
    check_embedding(rot, rotator_graph(), r.witness);

    Graph tw = twister_graph();
    auto t = is_orientable_prismatic(tw);
    CHECK(!t.orientable);
    check_embedding(tw, t.witness_is_twister ? twister_graph() : rotator_graph(), t.witness);

    CHECK_THROWS_AS((void)is_orientable_prismatic(complete(4)), std::invalid_argument);
}

TEST_CASE("is_k_substantial") {
    // complement of the rotator: its triads are the rotator's four triangles,
    // three of which are pairwise disjoint
    Graph h = rotator_graph().complement();
    CHECK(is_k_substantial(h, 1).holds);
    CHECK(is_k_substantial(h, 2).holds);
    CHECK(is_k_substantial(h, 3).holds);
    auto r4 = is_k_substantial(h, 4);
    CHECK(!r4.holds);
    CHECK(r4.violating_s.size() <= 3);
    // the reported S really does meet every triad
    for (auto& t : enumerate_triads(h)) CHECK(t.intersects(r4.violating_s));

    // no triads at all: not even 1-substantial, S = empty set
    auto none = is_k_substantial(complete(4), 1);
    CHECK(!none.holds);
    CHECK(none.violating_s.empty());

    CHECK_THROWS_AS((void)is_k_substantial(h, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)is_k_substantial(h, 0), std::invalid_argument);
}

TEST_CASE("core and strong core") {
    // rotator triangles: {0,1,2}, {0,3,6}, {1,4,7}, {2,5,8}
    auto r = core_strong_core(rotator_graph());
    REQUIRE(r.triangles.size() == 4);
    CHECK(r.triangles[0] == VertexSet::of(9, {0, 1, 2}));
    CHECK(r.core == VertexSet::full(9));
    CHECK(r.strong_core == VertexSet::of(9, {0, 1, 2}));
    CHECK(r.weak == VertexSet::of(9, {3, 4, 5, 6, 7, 8}));
    CHECK(r.triangle_count[0] == 2);
    CHECK(r.triangle_count[3] == 1);

    auto c5 = core_strong_core(cycle(5));
    CHECK(c5.triangles.empty());
    CHECK(c5.core.empty());
    CHECK(c5.strong_core.empty());

    auto k4 = core_strong_core(complete(4));
    CHECK(k4.triangles.size() == 4);
    CHECK(k4.core == VertexSet::full(4));
    CHECK(k4.weak.empty());
}

namespace {

bool brute_has_clique_cutset(const Graph& g) {
    bool found = false;
    std::vector<Vertex> stack;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (found) return;
        if (!stack.empty()) {
            VertexSet k = VertexSet::of(g.n(), stack);
            auto [h, map] = g.induced(k.complement());
            if (h.n() > 0 && !h.connected()) found = true;
        }
        for (Vertex v = from; v < g.n() && !found; ++v) {
            bool ok = true;
            for (Vertex u : stack)
                if (!g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            stack.push_back(v);
            self(self, v + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace

TEST_CASE("find_clique_cutset") {
    CHECK(!find_clique_cutset(cycle(5)).has_value());
    CHECK(!find_clique_cutset(complete(4)).has_value());
    CHECK(!find_clique_cutset(petersen()).has_value());

    auto p = find_clique_cutset(path(3));
    REQUIRE(p.has_value());
    CHECK(p->k == VertexSet::of(3, {1}));

    // bowtie: triangles 0,1,2 and 2,3,4 sharing vertex 2
    Graph bow = Graph::make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto b = find_clique_cutset(bow);
    REQUIRE(b.has_value());
    CHECK(b->k == VertexSet::of(5, {2}));
    CHECK((b->a | b->b) == VertexSet::of(5, {0, 1, 3, 4}));

    // K4 minus an edge: the shared edge {1,2} separates 0 from 3
    Graph diamond = Graph::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto d = find_clique_cutset(diamond);
    REQUIRE(d.has_value());
    CHECK(d->k == VertexSet::of(4, {1, 2}));

    CHECK_THROWS_AS((void)find_clique_cutset(Graph::make(2, {})), std::invalid_argument);
}

TEST_CASE("clique cutset agrees with brute force on random graphs") {
    std::mt19937 rng(17);
    int connected_seen = 0;
    for (int t = 0; t < 200 && connected_seen < 80; ++t) {
        Graph g = random_graph(8, 0.35, rng);
        if (!g.connected()) continue;
        ++connected_seen;
        auto cut = find_clique_cutset(g);
        CHECK(cut.has_value() == brute_has_clique_cutset(g));
        if (cut) {
            CHECK(g.is_clique(cut->k));
            CHECK(!cut->a.empty());
            CHECK(!cut->b.empty());
            CHECK((cut->k | cut->a | cut->b) == VertexSet::full(8));
            // no edges between the sides
            cut->a.for_each([&](Vertex u) { CHECK(!g.neighbors(u).intersects(cut->b)); });
        }
    }
    CHECK(connected_seen >= 50);
}
