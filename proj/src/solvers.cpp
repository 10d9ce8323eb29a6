#include "tihany/solvers.hpp"

#include <algorithm>
#include <chrono>

namespace tihany {

bool Coloring::proper(const Graph& g) const {
    VertexSet seen(g.n());
    for (const auto& cls : classes) {
        if (!g.is_stable(cls)) return false;
        if (seen.intersects(cls)) return false;
        seen = seen | cls;
    }
    return seen.size() == g.n();
}

int Coloring::class_of(Vertex v) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].contains(v)) return int(i);
    return -1;
}

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct ColorSearch {
    const Graph& g;
    int k;
    const Budget& budget;
    Clock clock;
    uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<int> color;          // vertex -> class or -1
    std::vector<VertexSet> classes;  // class -> members

    ColorSearch(const Graph& g_, int k_, const Budget& b)
        : g(g_), k(k_), budget(b), color(g_.n(), -1), classes(k_, VertexSet(g_.n())) {}

    bool budget_ok() {
        if (++nodes > budget.node_limit) {
            out_of_budget = true;
            return false;
        }
        if ((nodes & 1023) == 0 && clock.elapsed() > budget.time_limit) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // Saturation degree; ties broken by lowest id.
    Vertex pick() const {
        Vertex best = -1;
        int best_sat = -1;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (color[v] != -1) continue;
            int sat = 0;
            for (int c = 0; c < k; ++c)
                if (g.neighbors(v).intersects(classes[c])) ++sat;
            if (sat > best_sat) {
                best_sat = sat;
                best = v;
            }
        }
        return best;
    }

    bool solve(int used) {
        if (!budget_ok()) return false;
        Vertex v = pick();
        if (v == -1) return true;
        int limit = std::min(k, used + 1);  // at most one fresh class
        for (int c = 0; c < limit; ++c) {
            if (g.neighbors(v).intersects(classes[c])) continue;
            color[v] = c;
            classes[c].add(v);
            if (solve(std::max(used, c + 1))) return true;
            classes[c].remove(v);
            color[v] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

ColoringSearch find_coloring(const Graph& g, int k, const Budget& budget) {
    budget.validate();
    if (k < 0) throw std::invalid_argument("find_coloring: negative k");
    if (g.n() == 0) return {SearchStatus::Found, Coloring{}};
    if (k == 0) return {SearchStatus::Exhausted, {}};
    ColorSearch s(g, k, budget);
    if (s.solve(0)) {
        Coloring col;
        for (int c = 0; c < k; ++c)
            if (!s.classes[c].empty()) col.classes.push_back(s.classes[c]);
        return {SearchStatus::Found, std::move(col)};
    }
    return {s.out_of_budget ? SearchStatus::OutOfBudget : SearchStatus::Exhausted, {}};
}

ChiResult chromatic_number(const Graph& g, const Budget& budget) {
    budget.validate();
    if (g.n() == 0) return {true, 0, Coloring{}};
    int lb = clique_number(g).omega;
    for (int k = lb;; ++k) {
        ColoringSearch res = find_coloring(g, k, budget);
        if (res.status == SearchStatus::Found) return {true, k, std::move(res.coloring)};
        if (res.status == SearchStatus::OutOfBudget) return {false, -1, {}};
    }
}

namespace {

// Bron-Kerbosch with pivoting, tracking the best clique seen.
void bk_max(const Graph& g, VertexSet r, VertexSet p, VertexSet x, CliqueResult& best) {
    if (p.empty() && x.empty()) {
        if (r.size() > best.omega) best = {r.size(), r};
        return;
    }
    if (r.size() + p.size() <= best.omega) return;
    Vertex pivot = -1;
    int best_cover = -1;
    (p | x).for_each([&](Vertex u) {
        int cover = g.neighbors(u).intersection_size(p);
        if (cover > best_cover) {
            best_cover = cover;
            pivot = u;
        }
    });
    VertexSet cands = p - g.neighbors(pivot);
    cands.for_each([&](Vertex v) {
        VertexSet r2 = r;
        r2.add(v);
        bk_max(g, r2, p & g.neighbors(v), x & g.neighbors(v), best);
        p.remove(v);
        x.add(v);
    });
}

}  // namespace

CliqueResult clique_number(const Graph& g) {
    CliqueResult best{0, VertexSet(g.n())};
    if (g.n() == 0) return best;
    bk_max(g, VertexSet(g.n()), VertexSet::full(g.n()), VertexSet(g.n()), best);
    return best;
}

CliqueResult stability_number(const Graph& g) { return clique_number(g.complement()); }

namespace {

// Blossom algorithm for maximum cardinality matching in general graphs.
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, p, base;
    std::vector<bool> used, blossom;

    explicit Blossom(const Graph& g_) : g(g_), n(g_.n()), match(n, -1), p(n), base(n), used(n), blossom(n) {}

    int lca(int a, int b) {
        std::vector<bool> mark(n, false);
        for (;;) {
            a = base[a];
            mark[a] = true;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::vector<int> q{root};
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            std::vector<Vertex> nbrs = g.neighbors(v).to_vector();
            for (int to : nbrs) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void run() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    Blossom b(g);
    b.run();
    Matching m;
    for (int v = 0; v < g.n(); ++v)
        if (b.match[v] > v) m.edges.push_back({v, b.match[v]});
    return m;
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern) {
    int np = pattern.n();
    if (np > g.n()) throw std::invalid_argument("find_induced: pattern larger than host");
    if (np == 0) return std::vector<Vertex>{};

    // Order pattern vertices: seed with the max-degree vertex, then grow by
    // most placed neighbors (ties: higher degree, then lower id).
    std::vector<Vertex> order;
    std::vector<bool> placed(np, false);
    for (int step = 0; step < np; ++step) {
        Vertex best = -1;
        int best_key = -1, best_deg = -1;
        for (Vertex v = 0; v < np; ++v) {
            if (placed[v]) continue;
            int key = 0;
            for (Vertex u : order)
                if (pattern.adjacent(v, u)) ++key;
            int deg = pattern.degree(v);
            if (key > best_key || (key == best_key && deg > best_deg)) {
                best_key = key;
                best_deg = deg;
                best = v;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }

    std::vector<Vertex> img(np, -1);
    VertexSet used(g.n());

    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == np) return true;
        Vertex pv = order[depth];
        // candidates: intersect host neighborhoods of images of placed
        // pattern-neighbors
        VertexSet cands = VertexSet::full(g.n()) - used;
        for (int j = 0; j < depth; ++j)
            if (pattern.adjacent(pv, order[j])) cands = cands & g.neighbors(img[order[j]]);
        bool ok = false;
        cands.for_each([&](Vertex u) {
            if (ok) return;
            if (g.degree(u) < pattern.degree(pv)) return;
            for (int j = 0; j < depth; ++j)
                if (!pattern.adjacent(pv, order[j]) && g.adjacent(u, img[order[j]])) return;
            img[pv] = u;
            used.add(u);
            if (self(self, depth + 1)) {
                ok = true;
                return;
            }
            used.remove(u);
            img[pv] = -1;
        });
        return ok;
    };

    if (rec(rec, 0)) return img;
    return std::nullopt;
}

}  // namespace tihany
