#include "doctest.h"

#include "oracles.hpp"
#include "tihany/engine.hpp"

using namespace tihany;
using namespace oracles;

namespace {
const Budget kBudget{10'000'000, 10.0};
}

TEST_CASE("is_tihany examples") {
    // C5, any edge: chi 3 -> 2 and 2 >= 3-2+1
    auto c = is_tihany(cycle(5), VertexSet::of(5, {0, 1}), kBudget);
    REQUIRE(c.known);
    CHECK(c.tihany);
    CHECK(c.cert.chi_before == 3);
    CHECK(c.cert.chi_after == 2);

    // W5, {hub, rim}: removal leaves P4, chi 2 < 4-2+1
    auto w = is_tihany(wheel5(), VertexSet::of(6, {5, 0}), kBudget);
    REQUIRE(w.known);
    CHECK(!w.tihany);
    CHECK(w.cert.chi_before == 4);
    CHECK(w.cert.chi_after == 2);
    REQUIRE(w.refutation.has_value());
    CHECK(w.refutation->k() == 2);
    // the refutation colors exactly V minus K
    VertexSet covered(6);
    for (auto& cls : w.refutation->classes) {
        CHECK(wheel5().is_stable(cls));
        covered = covered | cls;
    }
    CHECK(covered == VertexSet::of(6, {1, 2, 3, 4}));

    // W5, rim edge: hub + P3 is 3-chromatic
    auto e = is_tihany(wheel5(), VertexSet::of(6, {0, 1}), kBudget);
    REQUIRE(e.known);
    CHECK(e.tihany);
    CHECK(e.cert.chi_after == 3);

    CHECK_THROWS_AS((void)is_tihany(cycle(5), VertexSet::of(5, {0, 2}), kBudget),
                    std::invalid_argument);
    CHECK(!is_tihany(icosahedron(), VertexSet::of(12, {1, 2}), Budget{5, 10.0}).known);
}

TEST_CASE("cliques_up_to ordering") {
    auto cs = cliques_up_to(cycle(5), 2);
    REQUIRE(cs.size() == 10);
    CHECK(cs[0] == VertexSet::of(5, {0}));
    CHECK(cs[4] == VertexSet::of(5, {4}));
    CHECK(cs[5] == VertexSet::of(5, {0, 1}));
    CHECK(cs[6] == VertexSet::of(5, {0, 4}));
    CHECK(cs[7] == VertexSet::of(5, {1, 2}));

    CHECK(cliques_up_to(complete(4), 4).size() == 4 + 6 + 4 + 1);
}

TEST_CASE("find_min_tihany") {
    // W5: no single vertex keeps chi = 4; rim edge {0,1} is first
    auto w = find_min_tihany(wheel5(), 5, kBudget);
    REQUIRE(w.status == MinTihany::Status::Found);
    CHECK(w.cert.clique == VertexSet::of(6, {0, 1}));
    CHECK(w.cert.chi_before == 4);
    CHECK(w.cert.chi_after == 3);

    // icosahedron is vertex-transitive with chi(G-v) = 4 = chi(G): removing
    // one vertex still leaves a 5-wheel, so a single vertex is already Tihany
    auto ic = find_min_tihany(icosahedron(), 5, kBudget);
    REQUIRE(ic.status == MinTihany::Status::Found);
    CHECK(ic.cert.clique.size() == 1);
    CHECK(ic.cert.chi_before == 4);
    CHECK(ic.cert.chi_after == 4);

    // C5 minus any vertex is P4
    CHECK(find_min_tihany(cycle(5), 1, kBudget).status == MinTihany::Status::None);

    CHECK_THROWS_AS((void)find_min_tihany(cycle(5), 0, kBudget), std::invalid_argument);
}

TEST_CASE("find_min_tihany determinism") {
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(9, 0.5, rng);
        auto a = find_min_tihany(g, 5, kBudget);
        auto b = find_min_tihany(g, 5, kBudget);
        CHECK(a.status == b.status);
        if (a.status == MinTihany::Status::Found) {
            CHECK(a.cert.clique == b.cert.clique);
            CHECK(a.cert.chi_after == b.cert.chi_after);
        }
    }
}

TEST_CASE("classify_clique") {
    auto c5 = classify_clique(cycle(5), VertexSet::of(5, {0, 1}));
    CHECK(c5.dense);  // C(K) is empty
    CHECK(c5.good);

    auto hub = classify_clique(wheel5(), VertexSet::of(6, {5}));
    CHECK(!hub.dense);  // C = the rim C5
    CHECK(!hub.good);

    // path u-v-x (u=0, v=1, x=2), F = {{x,u}}, K = {u,v}: x in C({v})
    Graph p3 = path(3);
    auto sf = classify_clique(p3, VertexSet::of(3, {0, 1}), {{2, 0}});
    CHECK(sf.s_f == VertexSet::of(3, {2}));

    // S_F for |K| = 1 uses C(empty) = V
    auto single = classify_clique(p3, VertexSet::of(3, {0}), {{2, 0}});
    CHECK(single.s_f == VertexSet::of(3, {2}));

    CHECK_THROWS_AS(classify_clique(p3, VertexSet::of(3, {0}), {{0, 1}, {1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("check_lemma_basic") {
    // W5, K = {hub, v0}: classes of the 2-coloring of the leftover P4 each
    // contain a common neighbor of K
    auto w = check_lemma_basic(wheel5(), VertexSet::of(6, {5, 0}), kBudget);
    CHECK(w.outcome == LemmaBasic::Outcome::Ok);
    REQUIRE(w.witnesses.size() == 2);
    for (Vertex v : w.witnesses)
        CHECK(wheel5().neighbors(v).intersection_size(VertexSet::of(6, {5, 0})) == 2);

    auto c = check_lemma_basic(cycle(5), VertexSet::of(5, {0, 1}), kBudget);
    CHECK(c.outcome == LemmaBasic::Outcome::Vacuous);

    // K4 minus an edge, K = the edge of the two degree-3 vertices: chi = 3,
    // G\K is the nonadjacent pair {0,3}, which is 1-colorable, and both its
    // members are complete to K
    Graph diamond = Graph::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    auto d = check_lemma_basic(diamond, VertexSet::of(4, {1, 2}), kBudget);
    CHECK(d.outcome == LemmaBasic::Outcome::Ok);
    REQUIRE(d.witnesses.size() == 1);
}

TEST_CASE("lemma: dense cliques are Tihany") {
    std::mt19937 rng(31);
    int dense_checked = 0;
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(9, 0.55, rng);
        auto chi = chromatic_number(g, kBudget);
        if (chi.chi <= clique_number(g).omega) continue;
        for (const auto& k : cliques_up_to(g, 5)) {
            if (!classify_clique(g, k).dense) continue;
            auto r = is_tihany(g, k, kBudget);
            REQUIRE(r.known);
            CHECK(r.tihany);
            ++dense_checked;
        }
    }
    CHECK(dense_checked > 0);
}

TEST_CASE("lemma: equal-neighborhood braces are Tihany") {
    // for braces E = ux, E' = uy with xy not an edge and C(E) = C(E'),
    // both braces are Tihany
    std::mt19937 rng(37);
    int pairs_checked = 0;
    for (int t = 0; t < 200 && pairs_checked < 6; ++t) {
        Graph g = random_graph(8, 0.5, rng);
        if (find_claw(g).has_value()) continue;
        if (chromatic_number(g, kBudget).chi <= clique_number(g).omega) continue;
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex x = 0; x < 8; ++x)
                for (Vertex y = x + 1; y < 8; ++y) {
                    if (x == u || y == u) continue;
                    if (!g.adjacent(u, x) || !g.adjacent(u, y) || g.adjacent(x, y)) continue;
                    auto e1 = VertexSet::of(8, {u, x}), e2 = VertexSet::of(8, {u, y});
                    auto p1 = partition_wrt_clique(g, e1), p2 = partition_wrt_clique(g, e2);
                    if (p1.c != p2.c) continue;
                    ++pairs_checked;
                    CHECK(is_tihany(g, e1, kBudget).tihany);
                    CHECK(is_tihany(g, e2, kBudget).tihany);
                }
    }
}

TEST_CASE("gallai_edmonds examples") {
    auto p = gallai_edmonds(path(3));
    CHECK(p.d == VertexSet::of(3, {0, 2}));
    CHECK(p.a == VertexSet::of(3, {1}));
    CHECK(p.c.empty());
    CHECK(p.mu == 1);
    CHECK(p.components_of_d == 2);

    auto k2 = gallai_edmonds(complete(2));
    CHECK(k2.d.empty());
    CHECK(k2.a.empty());
    CHECK(k2.c == VertexSet::full(2));

    auto k3 = gallai_edmonds(complete(3));
    CHECK(k3.d == VertexSet::full(3));
    CHECK(k3.a.empty());
}

TEST_CASE("gallai_edmonds agrees with brute force") {
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(4 + int(t % 5), 0.4, rng);
        auto ge = gallai_edmonds(g);  // throws if the structure identity fails
        CHECK(ge.d == brute_exposable(g));
        CHECK(ge.mu == brute_matching_number(g));
    }
}

TEST_CASE("merge_cutset_colorings") {
    auto p = merge_cutset_colorings(path(3), VertexSet::of(3, {1}), VertexSet::of(3, {0}),
                                    VertexSet::of(3, {2}), kBudget);
    CHECK(p.k() == 2);
    CHECK(p.proper(path(3)));

    Graph bow = Graph::make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto b = merge_cutset_colorings(bow, VertexSet::of(5, {2}), VertexSet::of(5, {0, 1}),
                                    VertexSet::of(5, {3, 4}), kBudget);
    CHECK(b.k() == 3);
    CHECK(b.proper(bow));

    // bowtie with a pendant on one tip: sides have chi 3 and 3 across {2}
    Graph bp = Graph::make(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
    auto m = merge_cutset_colorings(bp, VertexSet::of(6, {2}), VertexSet::of(6, {0, 1}),
                                    VertexSet::of(6, {3, 4, 5}), kBudget);
    CHECK(m.k() == 3);
    CHECK(m.proper(bp));

    CHECK_THROWS_AS((void)merge_cutset_colorings(cycle(4), VertexSet::of(4, {0}),
                                                 VertexSet::of(4, {1}), VertexSet::of(4, {2, 3}),
                                                 kBudget),
                    std::invalid_argument);
}

TEST_CASE("merged coloring count equals chi across clique cutsets") {
    std::mt19937 rng(43);
    int seen = 0;
    for (int t = 0; t < 120 && seen < 25; ++t) {
        Graph g = random_graph(8, 0.35, rng);
        if (!g.connected()) continue;
        auto cut = find_clique_cutset(g);
        if (!cut) continue;
        ++seen;
        auto col = merge_cutset_colorings(g, cut->k, cut->a, cut->b, kBudget);
        CHECK(col.proper(g));
        CHECK(col.k() == chromatic_number(g, kBudget).chi);
    }
    CHECK(seen >= 10);
}

TEST_CASE("find_nonreduced_wjoin") {
    // K4 minus the edge {1,3}: A={0,1}, B={2,3}, cross edges 02,03,12
    Graph g = Graph::make(4, {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}});
    auto w = find_nonreduced_wjoin(g);
    REQUIRE(w.has_value());
    CHECK((w->a | w->b) == VertexSet::full(4));
    CHECK(g.is_clique(w->a));
    CHECK(g.is_clique(w->b));
    CHECK(!w->reduced);

    CHECK(!find_nonreduced_wjoin(cycle(5)).has_value());
    CHECK(!find_nonreduced_wjoin(complete(5)).has_value());
}

TEST_CASE("reduce_wjoin") {
    Graph g = Graph::make(4, {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}});
    auto w = find_nonreduced_wjoin(g);
    REQUIRE(w.has_value());
    Graph h = reduce_wjoin(g, *w, kBudget);
    CHECK(h.n() == 4);
    CHECK(h.edge_count() < g.edge_count());
    CHECK(chromatic_number(h, kBudget).chi == 3);
    CHECK(!find_claw(h).has_value());
    // the reduced pair admits no further non-reduced W-join on these vertices
    auto again = find_nonreduced_wjoin(h);
    if (again) CHECK((again->a != w->a || again->b != w->b));

    CHECK_THROWS_AS((void)reduce_wjoin(cycle(5), WJoin{VertexSet::of(5, {0}), VertexSet::of(5, {2}),
                                                       false, std::nullopt},
                                       kBudget),
                    std::invalid_argument);
}

TEST_CASE("reduce_wjoin properties on random graphs") {
    std::mt19937 rng(47);
    int reduced_count = 0;
    for (int t = 0; t < 150 && reduced_count < 12; ++t) {
        Graph g = random_graph(8, 0.6, rng);
        auto w = find_nonreduced_wjoin(g);
        if (!w) continue;
        int chi = chromatic_number(g, kBudget).chi;
        bool cf = !find_claw(g).has_value();
        Graph h = reduce_wjoin(g, *w, kBudget);
        ++reduced_count;
        CHECK(h.n() == g.n());
        CHECK(h.edge_count() < g.edge_count());
        CHECK(chromatic_number(h, kBudget).chi == chi);
        if (cf) CHECK(!find_claw(h).has_value());
    }
    CHECK(reduced_count >= 5);
}

TEST_CASE("elt_partition_exists") {
    auto c5 = elt_partition_exists(cycle(5), 2, 2, kBudget);
    REQUIRE(c5.has_value());
    CHECK(c5->s_side == VertexSet::of(5, {0, 1}));  // first edge in mask order
    CHECK(c5->t_side == VertexSet::of(5, {2, 3, 4}));

    CHECK(!elt_partition_exists(complete(2), 2, 2, kBudget).has_value());
    CHECK(elt_partition_exists(wheel5(), 2, 3, kBudget).has_value());

    CHECK_THROWS_AS((void)elt_partition_exists(cycle(5), 1, 2, kBudget), std::invalid_argument);
    CHECK_THROWS_AS((void)elt_partition_exists(Graph::make(17, {}), 2, 2, kBudget),
                    std::invalid_argument);
}

TEST_CASE("elt partitions verify their chi bounds") {
    std::mt19937 rng(53);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(9, 0.5, rng);
        int chi = chromatic_number(g, kBudget).chi;
        if (chi < 3) continue;
        for (int s = 2; s <= chi + 1 - 2; ++s) {
            int tt = chi + 1 - s;
            auto part = elt_partition_exists(g, s, tt, kBudget);
            if (!part) continue;
            CHECK(chromatic_number(g.induced(part->s_side).graph, kBudget).chi >= s);
            CHECK(chromatic_number(g.induced(part->t_side).graph, kBudget).chi >= tt);
            CHECK((part->s_side | part->t_side) == VertexSet::full(9));
            CHECK(!part->s_side.intersects(part->t_side));
        }
    }
}
