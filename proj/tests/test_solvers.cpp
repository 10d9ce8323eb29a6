#include "doctest.h"

#include "oracles.hpp"
#include "tihany/solvers.hpp"

using namespace tihany;
using namespace oracles;

namespace {
const Budget kBudget{10'000'000, 10.0};
}

TEST_CASE("chromatic_number on named graphs") {
    CHECK(chromatic_number(cycle(5), kBudget).chi == 3);
    CHECK(chromatic_number(complete(4), kBudget).chi == 4);
    CHECK(chromatic_number(wheel5(), kBudget).chi == 4);
    CHECK(chromatic_number(petersen(), kBudget).chi == 3);
    // icosahedron: no 3-coloring exists, a 4-coloring does
    auto r = chromatic_number(icosahedron(), kBudget);
    CHECK(r.chi == 4);
    CHECK(r.witness.proper(icosahedron()));
    CHECK(r.witness.k() == 4);
    CHECK(find_coloring(icosahedron(), 3, kBudget).status == SearchStatus::Exhausted);
}

TEST_CASE("find_coloring") {
    CHECK(find_coloring(cycle(5), 2, kBudget).status == SearchStatus::Exhausted);
    auto r = find_coloring(cycle(5), 3, kBudget);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.coloring.proper(cycle(5)));

    auto p = find_coloring(path(3), 2, kBudget);
    REQUIRE(p.status == SearchStatus::Found);
    CHECK(p.coloring.k() == 2);
    bool middle_alone = false;
    for (auto& cls : p.coloring.classes)
        if (cls == VertexSet::of(3, {1})) middle_alone = true;
    CHECK(middle_alone);
}

TEST_CASE("budget exhaustion is reported, not coerced") {
    Budget tiny{5, 10.0};
    auto r = find_coloring(icosahedron(), 3, tiny);
    CHECK(r.status == SearchStatus::OutOfBudget);
    auto c = chromatic_number(icosahedron(), tiny);
    CHECK(!c.known);
    CHECK_THROWS_AS((void)find_coloring(cycle(5), 3, Budget{0, 1.0}), std::invalid_argument);
}

TEST_CASE("chromatic witnesses are deterministic") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        Graph g = random_graph(9, 0.5, rng);
        auto a = chromatic_number(g, kBudget);
        auto b = chromatic_number(g, kBudget);
        CHECK(a.chi == b.chi);
        CHECK(a.witness.classes == b.witness.classes);
    }
}

TEST_CASE("chromatic oracle equivalence, n <= 10") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(4 + int(t % 7), 0.45, rng);
        auto r = chromatic_number(g, kBudget);
        REQUIRE(r.known);
        CHECK(r.chi == brute_chromatic(g));
        CHECK(r.witness.proper(g));
    }
}

TEST_CASE("clique and stability numbers") {
    CHECK(clique_number(icosahedron()).omega == 3);
    CHECK(clique_number(complete(5)).omega == 5);
    CHECK(clique_number(Graph::make(4, {})).omega == 1);
    CHECK(stability_number(cycle(5)).omega == 2);
    CHECK(stability_number(icosahedron()).omega == 3);
    CHECK(stability_number(complete(4)).omega == 1);

    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(10, 0.5, rng);
        auto r = clique_number(g);
        CHECK(r.omega == brute_clique_number(g));
        CHECK(g.is_clique(r.witness));
        CHECK(r.witness.size() == r.omega);
        // alpha(g) = omega(complement)
        CHECK(stability_number(g).omega == brute_clique_number(g.complement()));
        // omega <= chi
        CHECK(r.omega <= chromatic_number(g, kBudget).chi);
    }
}

TEST_CASE("maximum matching") {
    CHECK(maximum_matching(cycle(5)).size() == 2);
    CHECK(maximum_matching(complete(2)).size() == 1);
    CHECK(maximum_matching(path(4)).size() == 2);
    CHECK(maximum_matching(petersen()).size() == 5);

    std::mt19937 rng(9);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(4 + int(t % 9), 0.4, rng);
        Matching m = maximum_matching(g);
        // edges are real and disjoint
        VertexSet seen(g.n());
        for (auto [u, v] : m.edges) {
            CHECK(g.adjacent(u, v));
            CHECK(!seen.contains(u));
            CHECK(!seen.contains(v));
            seen.add(u);
            seen.add(v);
        }
        CHECK(m.size() == brute_matching_number(g));
    }
}

TEST_CASE("find_induced") {
    Graph star = claw();
    auto hit = find_induced(star, claw());
    REQUIRE(hit.has_value());
    CHECK((*hit)[0] == 0);  // center maps to the degree-3 vertex

    CHECK(!find_induced(cycle(5), complete(3)).has_value());
    CHECK(find_induced(petersen(), claw()).has_value());
    CHECK(find_induced(cycle(6), path(4)).has_value());
    CHECK(!find_induced(complete(4), path(3)).has_value());

    // a found map re-checks as an exact induced copy
    std::mt19937 rng(13);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(10, 0.5, rng);
        Graph pat = random_graph(4, 0.5, rng);
        auto m = find_induced(g, pat);
        if (!m) continue;
        for (int i = 0; i < pat.n(); ++i)
            for (int j = i + 1; j < pat.n(); ++j)
                CHECK(pat.adjacent(i, j) == g.adjacent((*m)[i], (*m)[j]));
    }
}
