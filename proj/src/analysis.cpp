#include "tihany/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tihany {

std::optional<ClawWitness> find_claw(const Graph& g) {
    for (Vertex c = 0; c < g.n(); ++c) {
        std::vector<Vertex> nb = g.neighbors(c).to_vector();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (size_t l = j + 1; l < nb.size(); ++l) {
                    if (g.adjacent(nb[i], nb[l]) || g.adjacent(nb[j], nb[l])) continue;
                    return ClawWitness{c, VertexSet::of(g.n(), {nb[i], nb[j], nb[l]})};
                }
            }
    }
    return std::nullopt;
}

std::vector<VertexSet> enumerate_triads(const Graph& g) {
    std::vector<VertexSet> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            for (Vertex w = v + 1; w < g.n(); ++w)
                if (!g.adjacent(u, w) && !g.adjacent(v, w))
                    out.push_back(VertexSet::of(g.n(), {u, v, w}));
        }
    return out;
}

SetShape set_shape(const Graph& g, const VertexSet& s) {
    SetShape r{};
    r.is_clique = g.is_clique(s);
    r.is_stable = g.is_stable(s);

    r.is_antimatching = true;
    s.for_each([&](Vertex v) {
        int nonneighbors = s.size() - 1 - g.neighbors(v).intersection_size(s);
        if (nonneighbors > 1) r.is_antimatching = false;
    });

    // cobipartite iff the complement restricted to s is bipartite
    auto [h, map] = g.induced(s);
    Graph hc = h.complement();
    std::vector<int> side(hc.n(), -1);
    r.is_cobipartite = true;
    for (Vertex start = 0; start < hc.n() && r.is_cobipartite; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::deque<Vertex> q{start};
        while (!q.empty() && r.is_cobipartite) {
            Vertex v = q.front();
            q.pop_front();
            hc.neighbors(v).for_each([&](Vertex u) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    q.push_back(u);
                } else if (side[u] == side[v]) {
                    r.is_cobipartite = false;
                }
            });
        }
    }
    return r;
}

namespace {

bool four_set_ok(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    Vertex vs[4] = {a, b, c, d};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(vs[i], vs[j])) ++edges;
    if (edges < 2) return false;
    // claw: some center adjacent to the other three, which are stable
    for (int i = 0; i < 4; ++i) {
        bool center = true, leaves_stable = true;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            if (!g.adjacent(vs[i], vs[j])) center = false;
            for (int l = j + 1; l < 4; ++l)
                if (l != i && g.adjacent(vs[j], vs[l])) leaves_stable = false;
        }
        if (center && leaves_stable) return false;
    }
    return true;
}

}  // namespace

PrismReport is_antiprismatic(const Graph& g, PrismMode mode) {
    const Graph h = (mode == PrismMode::Prismatic) ? g.complement() : g;
    int n = h.n();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d)
                    if (!four_set_ok(h, a, b, c, d))
                        return {false, VertexSet::of(n, {a, b, c, d})};
    return {true, VertexSet(g.n())};
}

Graph rotator_graph() {
    // v_i -> i-1: triangle v1v2v3; {v4,v5,v6} complete to {v7,v8,v9};
    // v_i ~ v_{i+3}, v_{i+6} for i=1,2,3
    std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
    for (int i = 3; i <= 5; ++i)
        for (int j = 6; j <= 8; ++j) e.push_back({i, j});
    for (int i = 0; i < 3; ++i) {
        e.push_back({i, i + 3});
        e.push_back({i, i + 6});
    }
    return Graph::make(9, e);
}

Graph twister_graph() {
    // v1..v8 -> 0..7, u1 -> 8, u2 -> 9
    std::vector<Edge> e{{8, 9}};
    for (int i = 0; i < 8; ++i) {
        e.push_back({i, (i + 1) % 8});
        e.push_back({i, (i + 4) % 8});
    }
    for (int j : {0, 2, 4, 6}) e.push_back({8, j});
    for (int j : {1, 3, 5, 7}) e.push_back({9, j});
    return Graph::make(10, e);
}

OrientabilityReport is_orientable_prismatic(const Graph& g) {
    if (!is_antiprismatic(g, PrismMode::Prismatic).holds)
        throw std::invalid_argument("is_orientable_prismatic: input is not prismatic");
    for (bool twister : {false, true}) {
        Graph pat = twister ? twister_graph() : rotator_graph();
        if (pat.n() > g.n()) continue;
        if (auto m = find_induced(g, pat)) return {false, *m, twister};
    }
    return {true, {}, false};
}

SubstantialReport is_k_substantial(const Graph& g, int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("is_k_substantial: k must be in 1..4");
    std::vector<VertexSet> triads = enumerate_triads(g);
    auto misses_some_triad = [&](const VertexSet& s) {
        for (const auto& t : triads)
            if (!t.intersects(s)) return true;
        return false;
    };
    // all S with |S| < k
    std::vector<Vertex> stack;
    auto rec = [&](auto&& self, Vertex from, int remaining) -> std::optional<VertexSet> {
        VertexSet s = VertexSet::of(g.n(), stack);
        if (!misses_some_triad(s)) return s;
        if (remaining == 0) return std::nullopt;
        for (Vertex v = from; v < g.n(); ++v) {
            stack.push_back(v);
            auto bad = self(self, v + 1, remaining - 1);
            stack.pop_back();
            if (bad) return bad;
        }
        return std::nullopt;
    };
    if (auto bad = rec(rec, 0, k - 1)) return {false, *bad};
    return {true, VertexSet(g.n())};
}

CoreReport core_strong_core(const Graph& g) {
    CoreReport r;
    r.core = VertexSet(g.n());
    r.weak = VertexSet(g.n());
    r.triangle_count.assign(g.n(), 0);
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (!g.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < g.n(); ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) {
                    r.triangles.push_back(VertexSet::of(g.n(), {a, b, c}));
                    for (Vertex v : {a, b, c}) {
                        ++r.triangle_count[v];
                        r.core.add(v);
                    }
                }
        }
    // b is weak iff some triangle {a,b,c} has both b and c in exactly one
    // triangle
    for (const auto& t : r.triangles) {
        std::vector<Vertex> vs = t.to_vector();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                if (r.triangle_count[vs[i]] == 1 && r.triangle_count[vs[j]] == 1) r.weak.add(vs[i]);
            }
    }
    r.strong_core = r.core - r.weak;
    return r;
}

namespace {

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
    VertexSet nb(g.n());
    s.for_each([&](Vertex v) { nb = nb | g.neighbors(v); });
    return nb - s;
}

std::vector<VertexSet> components_avoiding(const Graph& g, const VertexSet& removed) {
    std::vector<VertexSet> comps;
    VertexSet done = removed;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (done.contains(s)) continue;
        VertexSet comp(g.n());
        std::vector<Vertex> stack{s};
        comp.add(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](Vertex u) {
                if (!comp.contains(u) && !removed.contains(u)) {
                    comp.add(u);
                    stack.push_back(u);
                }
            });
        }
        done = done | comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Berry-Bordat enumeration of all minimal separators.
std::vector<VertexSet> minimal_separators(const Graph& g, size_t cap = 200000) {
    std::set<std::vector<Vertex>> seen;
    std::vector<VertexSet> out;
    std::deque<VertexSet> queue;
    auto push = [&](const VertexSet& s) {
        if (s.empty()) return;
        if (seen.insert(s.to_vector()).second) {
            out.push_back(s);
            queue.push_back(s);
        }
    };
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexSet closed = g.neighbors(v);
        closed.add(v);
        for (const auto& comp : components_avoiding(g, closed)) push(neighborhood_of_set(g, comp));
    }
    while (!queue.empty() && out.size() < cap) {
        VertexSet s = queue.front();
        queue.pop_front();
        std::vector<Vertex> members = s.to_vector();
        for (Vertex x : members) {
            VertexSet removed = s | g.neighbors(x);
            for (const auto& comp : components_avoiding(g, removed)) push(neighborhood_of_set(g, comp));
        }
    }
    return out;
}

std::optional<CliqueCutset> cutset_from_clique(const Graph& g, const VertexSet& k) {
    auto comps = components_avoiding(g, k);
    if (comps.size() < 2) return std::nullopt;
    VertexSet b(g.n());
    for (size_t i = 1; i < comps.size(); ++i) b = b | comps[i];
    return CliqueCutset{k, comps[0], b};
}

}  // namespace

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("find_clique_cutset: graph is disconnected");
    if (g.n() <= 2) return std::nullopt;
    if (g.n() <= 64) {
        std::vector<VertexSet> seps = minimal_separators(g);
        std::sort(seps.begin(), seps.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.to_vector() < b.to_vector();
        });
        for (const auto& s : seps)
            if (g.is_clique(s))
                if (auto cut = cutset_from_clique(g, s)) return cut;
        return std::nullopt;
    }
    // large-n fallback: all cliques of size <= 5 (documented limitation)
    std::vector<Vertex> stack;
    std::optional<CliqueCutset> found;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (found) return;
        if (!stack.empty()) {
            if (auto cut = cutset_from_clique(g, VertexSet::of(g.n(), stack))) {
                found = cut;
                return;
            }
        }
        if (stack.size() == 5) return;
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

}  // namespace tihany
