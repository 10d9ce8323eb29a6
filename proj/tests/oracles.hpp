// Brute-force oracles used by the tests.  These deliberately share no code
// with the library solvers: naive enumeration only.
#ifndef TIHANY_TEST_ORACLES_HPP
#define TIHANY_TEST_ORACLES_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "tihany/graph.hpp"

namespace oracles {

using tihany::Graph;
using tihany::Edge;
using tihany::Vertex;
using tihany::VertexSet;

// Smallest k admitting a proper coloring; naive backtracking in id order.
inline bool brute_colorable(const Graph& g, int k) {
    std::vector<int> color(g.n(), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int brute_chromatic(const Graph& g) {
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k)
        if (brute_colorable(g, k)) return k;
}

// Maximum matching size by recursion over the edge list.
inline int brute_matching_number(const Graph& g) {
    std::vector<Edge> es = g.edges();
    auto rec = [&](auto&& self, size_t i, VertexSet used) -> int {
        if (i == es.size()) return 0;
        int best = self(self, i + 1, used);
        auto [u, v] = es[i];
        if (!used.contains(u) && !used.contains(v)) {
            VertexSet used2 = used;
            used2.add(u);
            used2.add(v);
            best = std::max(best, 1 + self(self, i + 1, used2));
        }
        return best;
    };
    return rec(rec, 0, VertexSet(g.n()));
}

// Vertices exposed by at least one maximum matching, via enumeration of all
// maximum matchings.
inline VertexSet brute_exposable(const Graph& g) {
    int mu = brute_matching_number(g);
    std::vector<Edge> es = g.edges();
    VertexSet exposable(g.n());
    auto rec = [&](auto&& self, size_t i, VertexSet used, int size) -> void {
        if (size + int(es.size() - i) < mu) return;
        if (size == mu) {
            exposable = exposable | used.complement();
            return;
        }
        if (i == es.size()) return;
        self(self, i + 1, used, size);
        auto [u, v] = es[i];
        if (!used.contains(u) && !used.contains(v)) {
            VertexSet used2 = used;
            used2.add(u);
            used2.add(v);
            self(self, i + 1, used2, size + 1);
        }
    };
    rec(rec, 0, VertexSet(g.n()), 0);
    return exposable;
}

inline int brute_clique_number(const Graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, Vertex v, VertexSet cur) -> void {
        best = std::max(best, cur.size());
        for (Vertex u = v; u < g.n(); ++u) {
            bool ok = true;
            cur.for_each([&](Vertex w) {
                if (!g.adjacent(u, w)) ok = false;
            });
            if (ok) {
                VertexSet cur2 = cur;
                cur2.add(u);
                self(self, u + 1, cur2);
            }
        }
    };
    rec(rec, 0, VertexSet(g.n()));
    return best;
}

// --- small fixture graphs -------------------------------------------------

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::make(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::make(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::make(n, e);
}

// 5-wheel: rim 0..4, hub 5.
inline Graph wheel5() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, 5});
    }
    return Graph::make(6, e);
}

inline Graph claw() { return Graph::make(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});       // outer cycle
        e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
        e.push_back({i, 5 + i});
    }
    return Graph::make(10, e);
}

// Icosahedron, built independently of the library generators: v_i ~ v_{i+1},
// v_{i+2} (subscripts mod 10 within 1..10), v_0 ~ odd, v_11 ~ even.
inline Graph icosahedron() {
    auto w = [](int x) { return ((x - 1) % 10) + 1; };
    std::vector<Edge> e;
    for (int i = 1; i <= 10; ++i) {
        e.push_back({i, w(i + 1)});
        e.push_back({i, w(i + 2)});
    }
    for (int j : {1, 3, 5, 7, 9}) e.push_back({0, j});
    for (int j : {2, 4, 6, 8, 10}) e.push_back({11, j});
    return Graph::make(12, e);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.push_back({i, j});
    return Graph::make(n, e);
}

}  // namespace oracles

#endif
