#include "tihany/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tihany {

namespace {

Edge norm(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

void add_complete(std::vector<Edge>& edges, const std::vector<Vertex>& a,
                  const std::vector<Vertex>& b) {
    for (Vertex u : a)
        for (Vertex v : b) edges.push_back({u, v});
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) edges.push_back({a[i], a[j]});
}

bool every_vertex_in_triad(const Graph& g) {
    VertexSet covered(g.n());
    for (const auto& t : enumerate_triads(g)) covered = covered | t;
    return covered.size() == g.n();
}

}  // namespace

// ---- thickenings -----------------------------------------------------------

ThickenPattern reduced_pattern(Edge base_pair, int ru, int rv) {
    if (ru < 1 || rv < 1 || ru * rv < 2)
        throw std::invalid_argument("reduced_pattern: need |X_u|*|X_v| >= 2");
    ThickenPattern p{norm(base_pair), {}};
    // rectangle A1 x B1, leaving one full row or column empty
    int a1 = (rv >= 2) ? ru : ru - 1;
    int b1 = (rv >= 2) ? rv - 1 : rv;
    for (int i = 0; i < a1; ++i)
        for (int j = 0; j < b1; ++j) p.edges.push_back({i, j});
    return p;
}

ThickenPattern nonreduced_pattern(Edge base_pair, int ru, int rv) {
    if (ru < 2 || rv < 2)
        throw std::invalid_argument("nonreduced_pattern: both sides must have size >= 2");
    return {norm(base_pair), {{0, 0}, {1, 1}}};
}

Thickened thicken(const ThickeningSpec& spec) {
    const Graph& base = spec.base;
    if ((int)spec.sizes.size() != base.n())
        throw std::invalid_argument("thicken: sizes must cover every base vertex");
    for (int s : spec.sizes)
        if (s < 1) throw std::invalid_argument("thicken: empty X_v");
    if (spec.patterns.size() != spec.f.size())
        throw std::invalid_argument("thicken: one pattern per F-pair required");

    VertexSet in_f(base.n());
    std::map<Edge, size_t> f_index;
    for (size_t i = 0; i < spec.f.size(); ++i) {
        Edge e = norm(spec.f[i]);
        if (e.first == e.second || e.first < 0 || e.second >= base.n())
            throw std::invalid_argument("thicken: invalid F-pair");
        if (in_f.contains(e.first) || in_f.contains(e.second))
            throw std::invalid_argument("thicken: vertex in two F-pairs");
        in_f.add(e.first);
        in_f.add(e.second);
        f_index[e] = i;
        if (norm(spec.patterns[i].base_pair) != e)
            throw std::invalid_argument("thicken: pattern/F-pair mismatch");
    }

    Thickened out;
    out.x.resize(base.n());
    out.base_of.clear();
    int total = 0;
    for (Vertex v = 0; v < base.n(); ++v) {
        for (int i = 0; i < spec.sizes[v]; ++i) {
            out.x[v].push_back(total + i);
            out.base_of.push_back(v);
        }
        total += spec.sizes[v];
    }

    std::vector<Edge> edges;
    for (Vertex v = 0; v < base.n(); ++v) add_clique(edges, out.x[v]);
    for (Vertex u = 0; u < base.n(); ++u)
        for (Vertex v = u + 1; v < base.n(); ++v) {
            auto it = f_index.find({u, v});
            if (it == f_index.end()) {
                if (base.adjacent(u, v)) add_complete(edges, out.x[u], out.x[v]);
                continue;
            }
            const ThickenPattern& p = spec.patterns[it->second];
            int ru = spec.sizes[u], rv = spec.sizes[v];
            std::vector<std::vector<bool>> cell(ru, std::vector<bool>(rv, false));
            for (auto [i, j] : p.edges) {
                if (i < 0 || i >= ru || j < 0 || j >= rv)
                    throw std::invalid_argument("thicken: pattern index out of range");
                cell[i][j] = true;
            }
            int count = 0;
            for (const auto& row : cell) count += (int)std::count(row.begin(), row.end(), true);
            if (count == 0 || count == ru * rv)
                throw std::invalid_argument("thicken: degenerate pattern (complete or anticomplete)");
            for (int i = 0; i < ru; ++i)
                for (int j = 0; j < rv; ++j)
                    if (cell[i][j]) edges.push_back({out.x[u][i], out.x[v][j]});
        }
    out.graph = Graph::make(total, edges);
    return out;
}

// ---- interval graphs -------------------------------------------------------

namespace {

// positions covered by arc [a,b] (clockwise when circular)
bool arc_covers_point(const IntervalSpec& spec, int a, int b, int p) {
    if (!spec.circular) return a <= p && p <= b;
    int len = (b - a + spec.points) % spec.points;
    int off = (p - a + spec.points) % spec.points;
    return off <= len;
}

// unit segments i -> i+1 (mod points) covered by arc [a,b]
bool arc_covers_segment(const IntervalSpec& spec, int a, int b, int seg) {
    int len = (b - a + spec.points) % spec.points;
    int off = (seg - a + spec.points) % spec.points;
    return off < len;
}

void validate_interval(const IntervalSpec& spec) {
    if (spec.points < 1) throw std::invalid_argument("interval_graph: need at least one point");
    // interval ends sit just outside their extreme vertices, so two intervals
    // share an endpoint exactly when they share a left end or a right end
    std::vector<int> lefts, rights;
    for (auto [a, b] : spec.intervals) {
        if (a < 0 || a >= spec.points || b < 0 || b >= spec.points)
            throw std::invalid_argument("interval_graph: endpoint out of range");
        if (a == b) throw std::invalid_argument("interval_graph: degenerate interval");
        if (!spec.circular && a > b)
            throw std::invalid_argument("interval_graph: reversed interval on a line");
        lefts.push_back(a);
        rights.push_back(b);
    }
    for (auto* side : {&lefts, &rights}) {
        std::sort(side->begin(), side->end());
        if (std::adjacent_find(side->begin(), side->end()) != side->end())
            throw std::invalid_argument("interval_graph: two intervals share an endpoint");
    }
    if (spec.circular) {
        size_t k = spec.intervals.size();
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                for (size_t l = j + 1; l < k; ++l) {
                    bool cover = true;
                    for (int seg = 0; seg < spec.points && cover; ++seg) {
                        bool c = false;
                        for (size_t t : {i, j, l})
                            c = c || arc_covers_segment(spec, spec.intervals[t].first,
                                                        spec.intervals[t].second, seg);
                        cover = c;
                    }
                    if (cover)
                        throw std::invalid_argument(
                            "interval_graph: three intervals cover the whole circle");
                }
    }
}

}  // namespace

Graph interval_graph(const IntervalSpec& spec) {
    validate_interval(spec);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.points; ++u)
        for (Vertex v = u + 1; v < spec.points; ++v)
            for (auto [a, b] : spec.intervals)
                if (arc_covers_point(spec, a, b, u) && arc_covers_point(spec, a, b, v)) {
                    edges.push_back({u, v});
                    break;
                }
    return Graph::make(spec.points, edges);
}

std::vector<Edge> interval_endpoint_pairs(const IntervalSpec& spec) {
    validate_interval(spec);
    std::vector<Edge> out;
    for (auto [a, b] : spec.intervals) out.push_back(norm({a, b}));
    return out;
}

Thickened fuzzy_interval(const IntervalSpec& spec, const std::vector<int>& fuzzy_pairs,
                         const std::vector<int>& sizes) {
    Graph base = interval_graph(spec);
    std::vector<Edge> all = interval_endpoint_pairs(spec);
    ThickeningSpec t{base, sizes, {}, {}};
    for (int idx : fuzzy_pairs) {
        if (idx < 0 || idx >= (int)all.size())
            throw std::invalid_argument("fuzzy_interval: fuzzy pair index out of range");
        Edge e = all[idx];
        t.f.push_back(e);
        t.patterns.push_back(reduced_pattern(e, sizes[e.first], sizes[e.second]));
    }
    return thicken(t);
}

// ---- named families --------------------------------------------------------

Graph icosahedron_graph(int level) {
    if (level < 0 || level > 2) throw std::invalid_argument("icosahedron_graph: level must be 0..2");
    // v1..v10 form the outer ring, v0 sees the odd ring vertices, v11 the even
    auto ring = [](int i) { return (i - 1) % 10 + 1; };
    std::vector<Edge> edges;
    for (int i = 1; i <= 10; ++i) {
        edges.push_back({i, ring(i + 1)});
        edges.push_back({i, ring(i + 2)});
    }
    for (int i = 1; i <= 9; i += 2) edges.push_back({0, i});
    for (int i = 2; i <= 10; i += 2) edges.push_back({11, i});
    Graph g0 = Graph::make(12, edges);
    if (level == 0) return g0;
    VertexSet drop(12);
    drop.add(11);
    if (level == 2) drop.add(10);
    return g0.without(drop);
}

std::vector<Edge> icosahedron_fprime() { return {{1, 4}, {6, 9}}; }

Graph ring_of_five(const RingOfFiveSpec& spec) {
    // a_1..a_5 -> 0..4, b_1..b_5 -> 5..9 (1-based subscripts mod 5)
    auto a = [](int i) { return (i - 1 + 5) % 5; };
    auto b = [](int i) { return 5 + (i - 1 + 5) % 5; };
    std::vector<std::vector<Vertex>> blocks(6);
    int total = 10;
    for (int i = 0; i < 6; ++i) {
        if (spec.v_sizes[i] < 0) throw std::invalid_argument("ring_of_five: negative block size");
        for (int t = 0; t < spec.v_sizes[i]; ++t) blocks[i].push_back(total++);
    }
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({a(i), a(i + 1)});
        edges.push_back({a(i), b(i + 3)});
        edges.push_back({a(i + 1), b(i + 3)});
        edges.push_back({a(i), b(i)});
    }
    for (int i = 1; i <= 5; ++i) add_complete(edges, blocks[0], {b(i)});
    for (int i = 1; i <= 5; ++i)
        add_complete(edges, blocks[i], {a(i - 1), b(i), a(i + 1)});
    for (const auto& [i, x, y] : spec.v_adjacency) {
        if (i < 1 || i > 5) throw std::invalid_argument("ring_of_five: adjacency block out of range");
        int j = i % 5 + 1;
        if (x < 0 || x >= (int)blocks[i].size() || y < 0 || y >= (int)blocks[j].size())
            throw std::invalid_argument("ring_of_five: adjacency index out of range");
        edges.push_back({blocks[i][x], blocks[j][y]});
    }
    return Graph::make(total, edges);
}

Graph mantled_lk33(const MantledSpec& spec) {
    auto w = [](int i, int j) { return 3 * (i - 1) + (j - 1); };  // a_i^j
    std::vector<std::vector<Vertex>> upper(3), lower(3);
    int total = 9;
    for (int i = 0; i < 3; ++i)
        for (int t = 0; t < spec.upper_sizes[i]; ++t) upper[i].push_back(total++);
    for (int i = 0; i < 3; ++i)
        for (int t = 0; t < spec.lower_sizes[i]; ++t) lower[i].push_back(total++);

    std::vector<Edge> edges;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int i2 = 1; i2 <= 3; ++i2)
                for (int j2 = 1; j2 <= 3; ++j2)
                    if (w(i, j) < w(i2, j2) && i != i2 && j != j2)
                        edges.push_back({w(i, j), w(i2, j2)});
    for (int i = 1; i <= 3; ++i) {
        add_complete(edges, upper[i - 1], {w(i, 1), w(i, 2), w(i, 3)});
        add_complete(edges, lower[i - 1], {w(1, i), w(2, i), w(3, i)});
    }

    int upper_lo = 9, upper_hi = 9, lower_hi = total;
    for (int i = 0; i < 3; ++i) upper_hi += spec.upper_sizes[i];
    auto block_of = [&](Vertex v) -> int {  // 0 = W, 1 = upper mantle, 2 = lower mantle
        if (v < upper_lo) return 0;
        return v < upper_hi ? 1 : 2;
    };
    auto stable_block = [&](Vertex v) -> const std::vector<Vertex>* {
        for (int i = 0; i < 3; ++i) {
            if (std::count(upper[i].begin(), upper[i].end(), v)) return &upper[i];
            if (std::count(lower[i].begin(), lower[i].end(), v)) return &lower[i];
        }
        return nullptr;
    };
    for (Edge e : spec.mantle_edges) {
        Edge m = norm(e);
        if (m.first < 9 || m.second >= lower_hi || m.first == m.second)
            throw std::invalid_argument("mantled_lk33: mantle edge outside the mantles");
        if (block_of(m.first) != block_of(m.second))
            throw std::invalid_argument("mantled_lk33: mantle edge joins the two mantles");
        if (stable_block(m.first) == stable_block(m.second))
            throw std::invalid_argument("mantled_lk33: mantle edge inside one stable block");
        edges.push_back(m);
    }
    Graph g = Graph::make(total, edges);
    // no triangle inside either mantle
    for (Vertex u = 9; u < total; ++u)
        for (Vertex v = u + 1; v < total; ++v) {
            if (!g.adjacent(u, v)) continue;
            for (Vertex x = v + 1; x < total; ++x)
                if (g.adjacent(u, x) && g.adjacent(v, x))
                    throw std::invalid_argument("mantled_lk33: triangle inside a mantle");
        }
    return g;
}

LineGraph line_graph(const Graph& h) {
    LineGraph out;
    out.edge_of = h.edges();
    int m = (int)out.edge_of.size();
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = out.edge_of[i];
            auto [c, d] = out.edge_of[j];
            if (a == c || a == d || b == c || b == d) edges.push_back({i, j});
        }
    out.graph = Graph::make(m, edges);
    return out;
}

Graph l_k33() {
    std::vector<Edge> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e.push_back({i, 3 + j});
    return line_graph(Graph::make(6, e)).graph;
}

// ---- triangle chains -------------------------------------------------------

namespace {

struct AdjMatrix {
    int n;
    std::vector<bool> m;
    explicit AdjMatrix(int n) : n(n), m(n * n, false) {}
    void set(Vertex u, Vertex v) {
        m[u * n + v] = m[v * n + u] = true;
    }
    void join(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        for (Vertex u : a)
            for (Vertex v : b)
                if (u != v) set(u, v);
    }
    Graph build() const {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (m[u * n + v]) edges.push_back({u, v});
        return Graph::make(n, edges);
    }
};

std::vector<Vertex> concat(std::initializer_list<const std::vector<Vertex>*> parts) {
    std::vector<Vertex> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

// perfect matching between s and t?
bool matched(const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& t) {
    if (s.size() != t.size()) return false;
    auto one_each = [&](const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        for (Vertex u : from) {
            int deg = 0;
            for (Vertex v : to)
                if (g.adjacent(u, v)) ++deg;
            if (deg != 1) return false;
        }
        return true;
    };
    return one_each(s, t) && one_each(t, s);
}

bool complete_between(const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& t) {
    for (Vertex u : s)
        for (Vertex v : t)
            if (u != v && !g.adjacent(u, v)) return false;
    return true;
}

bool anticomplete_between(const Graph& g, const std::vector<Vertex>& s,
                          const std::vector<Vertex>& t) {
    for (Vertex u : s)
        for (Vertex v : t)
            if (g.adjacent(u, v)) return false;
    return true;
}

bool contains_vertex(const std::vector<Vertex>& s, Vertex v) {
    return std::count(s.begin(), s.end(), v) > 0;
}

}  // namespace

std::string validate_triangle_chain(const TriangleChain& tc, bool cyclic, int n) {
    const Graph& g = tc.graph;
    const auto& x = tc.x;
    int sets = cyclic ? 2 * n : 2 * n + 1;
    if (cyclic && (n < 5 || n % 3 != 2)) return "(C0) n >= 5 with n = 2 modulo 3 required";
    if (!cyclic && n < 1) return "(P0) n >= 1 required";
    if ((int)x.size() != sets) return cyclic ? "(C0) wrong number of sets" : "(P0) wrong number of sets";

    // 1-based set accessors; cyclic indices wrap
    auto X = [&](int p) -> const std::vector<Vertex>& {
        if (cyclic) p = (p - 1 + 2 * n * 4) % (2 * n) + 1;
        return x[p - 1];
    };
    auto HAT = [&](int even_p) -> const std::vector<Vertex>& {
        if (cyclic) even_p = (even_p - 1 + 2 * n * 4) % (2 * n) + 1;
        return tc.hat[even_p / 2 - 1];
    };
    auto LMR = [&](int odd_p, int part) -> const std::vector<Vertex>& {
        if (cyclic) odd_p = (odd_p - 1 + 2 * n * 4) % (2 * n) + 1;
        return tc.lmr[(odd_p - 1) / 2][part];
    };

    std::string tag = cyclic ? "C" : "P";
    // stable, disjoint, union V
    std::vector<int> owner(g.n(), -1);
    for (int p = 1; p <= sets; ++p) {
        if (!g.is_stable(VertexSet::of(g.n(), X(p)))) return "(" + tag + "0) X sets must be stable";
        for (Vertex v : X(p)) {
            if (owner[v] != -1) return "(" + tag + "0) X sets must be disjoint";
            owner[v] = p;
        }
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (owner[v] == -1) return "(" + tag + "0) X sets must cover V";

    // (P1)/(C1)
    if ((int)tc.hat.size() != n) return "(" + tag + "1) one hat per even set";
    for (int i = 1; i <= n; ++i) {
        if (HAT(2 * i).empty()) return "(" + tag + "1) hat must be nonempty";
        for (Vertex v : HAT(2 * i))
            if (!contains_vertex(X(2 * i), v)) return "(" + tag + "1) hat must lie inside its set";
    }
    if (!cyclic && (HAT(2).size() != 1 || HAT(2 * n).size() != 1))
        return "(P1) hats of X_2 and X_2n must be singletons";
    for (int i = 1; i <= (cyclic ? n : n - 1); ++i) {
        int next = (i == n) ? 1 : i + 1;
        if (HAT(2 * i).size() > 1 && HAT(2 * next).size() > 1)
            return "(" + tag + "1) consecutive hats cannot both exceed size 1";
    }

    // (P2)/(C2)
    auto in_hat = [&](int even_p, Vertex v) { return contains_vertex(HAT(even_p), v); };
    for (int p = 1; p <= sets; ++p)
        for (int q = p + 1; q <= sets; ++q) {
            int k = q - p;
            bool in_scope = true;
            bool consecutive_sets = (k == 1);
            bool odd_pair_exception = (p % 2 == 1 && q % 2 == 1 && k == 2);
            if (cyclic) {
                in_scope = (k >= 2 && k <= 2 * n - 2);
                consecutive_sets = (k == 1 || k == 2 * n - 1);
                odd_pair_exception = (p % 2 == 1 && q % 2 == 1 && (k == 2 || k == 2 * n - 2));
            }
            if (!in_scope && !consecutive_sets) continue;
            if (consecutive_sets) continue;  // governed by (P5)-(P7)/(C4)-(C6)
            if (k % 3 == 2) {
                for (Vertex u : X(p))
                    for (Vertex v : X(q)) {
                        if (g.adjacent(u, v)) continue;
                        if (odd_pair_exception) continue;
                        if (p % 2 == 0 && q % 2 == 0 && !in_hat(p, u) && !in_hat(q, v)) continue;
                        return "(" + tag + "2) nonadjacent pair outside the allowed exceptions";
                    }
            } else {
                if (!anticomplete_between(g, X(p), X(q)))
                    return "(" + tag + "2) sets at distance != 2 mod 3 must be anticomplete";
            }
        }

    // (P3)/(C3): L,M,R partition each odd set
    int odd_sets = cyclic ? n : n + 1;
    if ((int)tc.lmr.size() != odd_sets) return "(" + tag + "3) one L,M,R split per odd set";
    for (int oi = 0; oi < odd_sets; ++oi) {
        int p = 2 * oi + 1;
        std::vector<Vertex> all = concat({&LMR(p, 0), &LMR(p, 1), &LMR(p, 2)});
        std::vector<Vertex> expected = X(p);
        std::sort(all.begin(), all.end());
        std::sort(expected.begin(), expected.end());
        if (all != expected || std::adjacent_find(all.begin(), all.end()) != all.end())
            return "(" + tag + "3) L,M,R must partition the odd set";
    }
    if (!cyclic) {
        if (!LMR(1, 0).empty() || !LMR(1, 1).empty())
            return "(P3) L_1 and M_1 must be empty";
        if (!LMR(2 * n + 1, 1).empty() || !LMR(2 * n + 1, 2).empty())
            return "(P3) M_2n+1 and R_2n+1 must be empty";
        // (P4)
        if (LMR(1, 2).empty() && !(n >= 2 && HAT(4).size() > 1))
            return "(P4) empty R_1 requires n >= 2 and |hat_4| > 1";
        if (LMR(2 * n + 1, 0).empty() && !(n >= 2 && HAT(2 * n - 2).size() > 1))
            return "(P4) empty L_2n+1 requires n >= 2 and |hat_2n-2| > 1";
    }

    // (P5)/(C4), (P6)/(C5), (P7)/(C6)
    std::string c4 = cyclic ? "(C4)" : "(P5)";
    std::string c5 = cyclic ? "(C5)" : "(P6)";
    std::string c6 = cyclic ? "(C6)" : "(P7)";
    for (int i = 1; i <= n; ++i) {
        int lo = 2 * i - 1, hi = 2 * i + 1;
        const auto& even = X(2 * i);
        const auto& hat = HAT(2 * i);
        std::vector<Vertex> nonhat;
        for (Vertex v : even)
            if (!contains_vertex(hat, v)) nonhat.push_back(v);

        if (!anticomplete_between(g, even, LMR(lo, 0)) ||
            !anticomplete_between(g, even, LMR(hi, 2)))
            return c4 + " even set must avoid L on its left and R on its right";
        if (!anticomplete_between(g, nonhat, LMR(lo, 1)) ||
            !anticomplete_between(g, nonhat, LMR(hi, 1)))
            return c4 + " non-hat vertices must avoid the M sets";
        for (Vertex v : nonhat)
            for (Vertex r : LMR(lo, 2))
                for (Vertex l : LMR(hi, 0)) {
                    if (!g.adjacent(r, l)) continue;
                    if (g.adjacent(v, r) == g.adjacent(v, l))
                        return c4 + " non-hat vertex must take exactly one end of each matching edge";
                }

        if (hat.size() == 1) {
            if (!matched(g, LMR(lo, 2), LMR(hi, 0)))
                return c5 + "(1) R and the next L must be matched";
            if (!anticomplete_between(g, LMR(lo, 1), concat({&LMR(hi, 0), &LMR(hi, 1)})) ||
                !anticomplete_between(g, LMR(lo, 2), LMR(hi, 1)))
                return c5 + "(1) only R-L edges allowed between the M/R and L/M unions";
            if (!complete_between(g, hat,
                                  concat({&LMR(lo, 2), &LMR(lo, 1), &LMR(hi, 0), &LMR(hi, 1)})))
                return c5 + "(2) hat vertex must be complete to R,M,L,M";
            if (!complete_between(g, LMR(lo, 0), X(hi)) ||
                !complete_between(g, X(lo), LMR(hi, 2)))
                return c5 + "(3) L complete to next set; set complete to next R";
            bool check_left = cyclic || i > 1;
            bool check_right = cyclic || i < n;
            if (check_left && !matched(g, LMR(lo, 1), HAT(2 * i - 2)))
                return c5 + "(4) M and the previous hat must be matched";
            if (check_right && !matched(g, LMR(hi, 1), HAT(2 * i + 2)))
                return c5 + "(4) M and the next hat must be matched";
        } else {
            bool applies = cyclic || (i > 1 && i < n);
            if (applies) {
                if (!LMR(lo, 2).empty() || !LMR(hi, 0).empty())
                    return c6 + "(1) large hat forces empty R and L";
                for (Vertex u : X(lo))
                    for (Vertex v : X(hi)) {
                        std::vector<Vertex> nu, nv;
                        for (Vertex h : hat) {
                            if (g.adjacent(u, h)) nu.push_back(h);
                            if (g.adjacent(v, h)) nv.push_back(h);
                        }
                        bool same = nu.size() == 1 && nv.size() == 1 && nu == nv;
                        if (!g.adjacent(u, v) != same)
                            return c6 + "(2) nonadjacency must match sharing a hat neighbour";
                    }
            }
        }
    }
    return "";
}

TriangleChainResult triangle_chain(const TriangleChainSpec& spec) {
    int n = spec.n;
    if (spec.cyclic && (n < 5 || n % 3 != 2))
        return {std::nullopt, "(C0) n >= 5 with n = 2 modulo 3 required"};
    if (!spec.cyclic && n < 1) return {std::nullopt, "(P0) n >= 1 required"};
    if ((int)spec.r_sizes.size() != n || (int)spec.extra_even.size() != n ||
        (int)spec.attach_r.size() != n)
        throw std::invalid_argument("triangle_chain: parameter vectors must have n entries");
    for (int i = 0; i < n; ++i)
        if (spec.r_sizes[i] < 0 || spec.extra_even[i] < 0)
            throw std::invalid_argument("triangle_chain: negative size");
    if (!spec.cyclic && (spec.r_sizes[0] < 1 || spec.r_sizes[n - 1] < 1))
        return {std::nullopt, "(P4) the end matchings must be nonempty"};

    int sets = spec.cyclic ? 2 * n : 2 * n + 1;
    int odd_sets = spec.cyclic ? n : n + 1;
    TriangleChain tc;
    tc.x.resize(sets);
    tc.hat.resize(n);
    tc.lmr.resize(odd_sets);

    // allocate vertices per set; odd sets in L,M,R order, even sets hat first
    int total = 0;
    auto alloc = [&](int count) {
        std::vector<Vertex> vs(count);
        std::iota(vs.begin(), vs.end(), total);
        total += count;
        return vs;
    };
    auto k_of = [&](int oi) {  // matching size on the right of odd set oi (0-based)
        return spec.r_sizes[oi % n];
    };
    for (int p = 1; p <= sets; ++p) {
        if (p % 2 == 1) {
            int oi = (p - 1) / 2;
            int lsize, msize, rsize;
            if (spec.cyclic) {
                lsize = k_of((oi - 1 + n) % n);
                msize = 1;
                rsize = k_of(oi);
            } else {
                lsize = (oi == 0) ? 0 : k_of(oi - 1);
                msize = (oi == 0 || oi == n) ? 0 : 1;
                rsize = (oi == n) ? 0 : k_of(oi);
            }
            tc.lmr[oi][0] = alloc(lsize);
            tc.lmr[oi][1] = alloc(msize);
            tc.lmr[oi][2] = alloc(rsize);
            tc.x[p - 1] = concat({&tc.lmr[oi][0], &tc.lmr[oi][1], &tc.lmr[oi][2]});
        } else {
            int ei = p / 2 - 1;
            tc.hat[ei] = alloc(1);
            std::vector<Vertex> extra = alloc(spec.extra_even[ei]);
            tc.x[p - 1] = tc.hat[ei];
            tc.x[p - 1].insert(tc.x[p - 1].end(), extra.begin(), extra.end());
        }
    }

    AdjMatrix adj(total);
    for (int i = 1; i <= n; ++i) {
        int oi = i - 1, oj = spec.cyclic ? i % n : i;
        const auto& r = tc.lmr[oi][2];
        const auto& l = tc.lmr[oj][0];
        for (size_t t = 0; t < r.size(); ++t) adj.set(r[t], l[t]);  // the R-L matching
        adj.join(tc.lmr[oi][0], tc.x[spec.cyclic ? (2 * i) % sets : 2 * i]);  // L complete to next odd set
        adj.join(tc.x[2 * i - 2], tc.lmr[oj][2]);                             // set complete to next R
        adj.join(tc.hat[i - 1], concat({&r, &tc.lmr[oi][1], &l, &tc.lmr[oj][1]}));
        for (Vertex v : tc.x[2 * i - 1])
            if (!contains_vertex(tc.hat[i - 1], v))
                for (size_t t = 0; t < r.size(); ++t)
                    adj.set(v, spec.attach_r[i - 1] ? r[t] : l[t]);
    }
    // distance rule: sets at distance 2 mod 3 are complete, except consecutive
    // odd sets (handled above)
    for (int p = 1; p <= sets; ++p)
        for (int q = p + 1; q <= sets; ++q) {
            int k = q - p;
            if (spec.cyclic && (k < 2 || k > 2 * n - 2)) continue;
            if (!spec.cyclic && k < 2) continue;
            if (k % 3 != 2) continue;
            bool consecutive_odd =
                p % 2 == 1 && q % 2 == 1 && (k == 2 || (spec.cyclic && k == 2 * n - 2));
            if (consecutive_odd) continue;
            adj.join(tc.x[p - 1], tc.x[q - 1]);
        }
    tc.graph = adj.build();

    std::string bad = validate_triangle_chain(tc, spec.cyclic, n);
    if (!bad.empty()) return {std::nullopt, bad};
    if (!is_antiprismatic(tc.graph, PrismMode::Prismatic).holds)
        return {std::nullopt, "prismatic re-check failed"};
    return {std::move(tc), ""};
}

// ---- three-cliqued graphs and hex chains -----------------------------------

void validate_three_cliqued(const ThreeCliqued& t) {
    const Graph& g = t.graph;
    if (t.a.intersects(t.b) || t.a.intersects(t.c) || t.b.intersects(t.c))
        throw std::invalid_argument("three-cliqued: A,B,C must be pairwise disjoint");
    if ((t.a | t.b | t.c).size() != g.n())
        throw std::invalid_argument("three-cliqued: A,B,C must cover V");
    for (const VertexSet* s : {&t.a, &t.b, &t.c})
        if (!g.is_clique(*s)) throw std::invalid_argument("three-cliqued: A,B,C must be cliques");
}

ThreeCliqued hex_chain(const std::vector<ThreeCliqued>& terms, const std::vector<Edge>& wear) {
    for (const auto& t : terms) validate_three_cliqued(t);
    int total = 0;
    std::vector<int> offset;
    for (const auto& t : terms) {
        offset.push_back(total);
        total += t.graph.n();
    }
    auto term_of = [&](Vertex v) {
        int i = (int)terms.size() - 1;
        while (offset[i] > v) --i;
        return i;
    };

    AdjMatrix adj(total);
    ThreeCliqued out{Graph(), VertexSet(total), VertexSet(total), VertexSet(total)};
    std::vector<VertexSet> triad_free;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        for (Edge e : t.graph.edges()) adj.set(e.first + offset[i], e.second + offset[i]);
        t.a.for_each([&](Vertex v) { out.a.add(v + offset[i]); });
        t.b.for_each([&](Vertex v) { out.b.add(v + offset[i]); });
        t.c.for_each([&](Vertex v) { out.c.add(v + offset[i]); });
        VertexSet in_triad(t.graph.n());
        for (const auto& tr : enumerate_triads(t.graph)) in_triad = in_triad | tr;
        triad_free.push_back(in_triad.complement());
    }
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j) {
            auto cross = [&](const VertexSet& from, const VertexSet& avoid) {
                from.for_each([&](Vertex u) {
                    for (Vertex v = 0; v < terms[j].graph.n(); ++v)
                        if (!avoid.contains(v)) adj.set(u + offset[i], v + offset[j]);
                });
            };
            cross(terms[i].a, terms[j].b);
            cross(terms[i].b, terms[j].c);
            cross(terms[i].c, terms[j].a);
        }
    for (Edge e : wear) {
        Vertex u = e.first, v = e.second;
        if (u < 0 || v < 0 || u >= total || v >= total || u == v)
            throw std::invalid_argument("hex_chain: wear edge out of range");
        if (term_of(u) == term_of(v))
            throw std::invalid_argument("hex_chain: wear edge inside one term");
        if (term_of(u) > term_of(v)) std::swap(u, v);
        int i = term_of(u), j = term_of(v);
        Vertex lu = u - offset[i], lv = v - offset[j];
        bool allowed = (terms[i].a.contains(lu) && terms[j].b.contains(lv)) ||
                       (terms[i].b.contains(lu) && terms[j].c.contains(lv)) ||
                       (terms[i].c.contains(lu) && terms[j].a.contains(lv));
        if (!allowed)
            throw std::invalid_argument("hex_chain: wear edge not an A-B/B-C/C-A pair");
        if (!triad_free[i].contains(lu) || !triad_free[j].contains(lv))
            throw std::invalid_argument("hex_chain: wear edge touches a triad vertex");
        adj.set(u, v);
    }
    out.graph = adj.build();
    validate_three_cliqued(out);
    return out;
}

// ---- three-cliqued generator classes ---------------------------------------

namespace {

void require_triads(const Graph& g, const char* who) {
    if (!every_vertex_in_triad(g))
        throw std::invalid_argument(std::string(who) + ": every vertex must be in a triad");
}

// the Z2 core: cliques A = a_0..a_n, B = b_0..b_n, C = c_1..c_n
Graph z2_core(int n) {
    if (n < 2) throw std::invalid_argument("z2 core: n >= 2 required");
    auto a = [&](int i) { return i; };
    auto b = [&](int i) { return n + 1 + i; };
    auto c = [&](int i) { return 2 * n + 2 + (i - 1); };
    AdjMatrix adj(3 * n + 2);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            adj.set(a(i), a(j));
            adj.set(b(i), b(j));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) adj.set(c(i), c(j));
    for (int i = 1; i <= n; ++i) adj.set(a(i), b(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                adj.set(c(i), a(j));
                adj.set(c(i), b(j));
            }
    return adj.build();
}

// drop `removed` from g, remapping the given sets and pairs; pairs with a
// removed endpoint are dropped
struct Removal {
    Graph graph;
    std::vector<int> new_id;  // old -> new, -1 when removed
};

Removal remove_vertices(const Graph& g, const std::vector<Vertex>& removed) {
    VertexSet drop(g.n());
    for (Vertex v : removed) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("removal out of range");
        drop.add(v);
    }
    auto ind = g.induced(drop.complement());
    Removal r{std::move(ind.graph), std::vector<int>(g.n(), -1)};
    for (size_t i = 0; i < ind.to_old.size(); ++i) r.new_id[ind.to_old[i]] = (int)i;
    return r;
}

VertexSet remap_set(const VertexSet& s, const Removal& r, int new_n) {
    VertexSet out(new_n);
    s.for_each([&](Vertex v) {
        if (r.new_id[v] != -1) out.add(r.new_id[v]);
    });
    return out;
}

std::vector<Edge> remap_pairs(const std::vector<Edge>& pairs, const Removal& r) {
    std::vector<Edge> out;
    for (Edge e : pairs)
        if (r.new_id[e.first] != -1 && r.new_id[e.second] != -1)
            out.push_back(norm({r.new_id[e.first], r.new_id[e.second]}));
    return out;
}

}  // namespace

ThreeCliquedWithF tc1(const Graph& h, Vertex v1, Vertex v2, Vertex v3) {
    std::vector<Vertex> hubs{v1, v2, v3};
    for (Vertex v : hubs)
        if (v < 0 || v >= h.n()) throw std::invalid_argument("tc1: hub out of range");
    if (v1 == v2 || v1 == v3 || v2 == v3) throw std::invalid_argument("tc1: hubs must be distinct");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (h.adjacent(hubs[i], hubs[j]))
                throw std::invalid_argument("tc1: hubs must be pairwise nonadjacent");
    for (Vertex v : hubs)
        if (h.degree(v) < 3) throw std::invalid_argument("tc1: hubs need degree >= 3");
    for (Edge e : h.edges())
        if (!contains_vertex(hubs, e.first) && !contains_vertex(hubs, e.second))
            throw std::invalid_argument("tc1: every edge must be incident with a hub");
    for (Vertex v = 0; v < h.n(); ++v)
        if (!contains_vertex(hubs, v) && h.degree(v) < 1)
            throw std::invalid_argument("tc1: non-hub vertices need degree >= 1");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int count = 0;
            for (Vertex v = 0; v < h.n(); ++v)
                if (!contains_vertex(hubs, v) && h.adjacent(v, hubs[i]) &&
                    !h.adjacent(v, hubs[j]))
                    ++count;
            if (count > 1)
                throw std::invalid_argument(
                    "tc1: more than one private neighbour for an ordered hub pair");
        }

    LineGraph lg = line_graph(h);
    ThreeCliquedWithF out;
    out.tc.graph = lg.graph;
    out.tc.a = VertexSet(lg.graph.n());
    out.tc.b = VertexSet(lg.graph.n());
    out.tc.c = VertexSet(lg.graph.n());
    for (Vertex v = 0; v < lg.graph.n(); ++v) {
        Edge e = lg.edge_of[v];
        if (e.first == v1 || e.second == v1)
            out.tc.a.add(v);
        else if (e.first == v2 || e.second == v2)
            out.tc.b.add(v);
        else
            out.tc.c.add(v);
    }
    validate_three_cliqued(out.tc);
    require_triads(out.tc.graph, "tc1");
    return out;
}

ThreeCliquedWithF tc2(const IntervalSpec& spec, const std::array<std::pair<int, int>, 3>& lines) {
    if (!spec.circular) throw std::invalid_argument("tc2: circular interval spec required");
    Graph g = interval_graph(spec);
    auto arc_inside = [&](std::pair<int, int> inner, std::pair<int, int> outer) {
        int len = (outer.second - outer.first + spec.points) % spec.points;
        int off_a = (inner.first - outer.first + spec.points) % spec.points;
        int off_b = (inner.second - outer.first + spec.points) % spec.points;
        return off_a <= off_b && off_b <= len;
    };
    std::array<VertexSet, 3> sets{VertexSet(spec.points), VertexSet(spec.points),
                                  VertexSet(spec.points)};
    for (int l = 0; l < 3; ++l) {
        auto [from, to] = lines[l];
        if (from < 0 || from >= spec.points || to < 0 || to >= spec.points)
            throw std::invalid_argument("tc2: line endpoint out of range");
        for (int p = 0; p < spec.points; ++p)
            if (arc_covers_point(spec, from, to, p)) sets[l].add(p);
        if (sets[l].size() >= 2) {
            bool inside = false;
            for (auto iv : spec.intervals) inside = inside || arc_inside(lines[l], iv);
            if (!inside)
                throw std::invalid_argument("tc2: a line with >= 2 vertices must lie inside one interval");
        }
    }
    ThreeCliquedWithF out{{g, sets[0], sets[1], sets[2]}, {}};
    validate_three_cliqued(out.tc);
    require_triads(g, "tc2");
    return out;
}

ThreeCliquedWithF tc3(int n, const std::vector<Vertex>& removed) {
    Graph h = z2_core(n);
    for (Vertex v : removed)
        if (v == 0 || v == n + 1)
            throw std::invalid_argument("tc3: a0 and b0 cannot be removed");
    int c_left = n;
    for (Vertex v : removed)
        if (v >= 2 * n + 2) --c_left;
    if (c_left < 2) throw std::invalid_argument("tc3: |C \\ X| >= 2 required");
    Removal r = remove_vertices(h, removed);
    VertexSet a(h.n()), b(h.n()), c(h.n());
    for (int i = 0; i <= n; ++i) {
        a.add(i);
        b.add(n + 1 + i);
    }
    for (int i = 0; i < n; ++i) c.add(2 * n + 2 + i);
    ThreeCliquedWithF out{{r.graph, remap_set(a, r, r.graph.n()), remap_set(b, r, r.graph.n()),
                           remap_set(c, r, r.graph.n())},
                          {}};
    validate_three_cliqued(out.tc);
    require_triads(out.tc.graph, "tc3");
    return out;
}

ThreeCliquedWithF tc4(const ThreeCliqued& t) {
    validate_three_cliqued(t);
    auto rep = is_antiprismatic(t.graph, PrismMode::Antiprismatic);
    if (!rep.holds) throw std::invalid_argument("tc4: input graph is not antiprismatic");
    return {t, {}};
}

ThreeCliquedWithF tc5(int variant, const std::vector<Vertex>& removed, bool v2v4, bool v5v7) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("tc5: variant must be 1 or 2");
    AdjMatrix adj(variant == 1 ? 8 : 9);
    VertexSet a(adj.n), b(adj.n), c(adj.n);
    std::vector<Edge> f;
    if (variant == 1) {
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6 && j <= i + 2; ++j) adj.set(i, j);
        adj.set(0, 5);
        adj.set(0, 6);
        adj.set(5, 6);
        adj.set(6, 7);
        f = {{0, 3}, {2, 5}};
        a = VertexSet::of(8, {0, 1, 2});
        b = VertexSet::of(8, {3, 4, 5});
        c = VertexSet::of(8, {6, 7});
        for (Vertex v : removed)
            if (v != 2 && v != 3)
                throw std::invalid_argument("tc5: variant 1 removals must lie in {v3,v4}");
    } else {
        adj.set(0, 1);
        for (Vertex u : {2, 3, 4, 5, 8})
            for (Vertex v : {2, 3, 4, 5, 8})
                if (u < v) adj.set(u, v);
        adj.set(6, 7);
        adj.set(8, 0);
        adj.set(8, 7);
        adj.set(0, 7);
        adj.set(1, 2);
        adj.set(5, 6);
        if (v2v4) adj.set(1, 3);
        if (v5v7) adj.set(4, 6);
        f = {{0, 2}, {5, 7}};
        a = VertexSet::of(9, {0, 1});
        b = VertexSet::of(9, {2, 3, 4, 5, 8});
        c = VertexSet::of(9, {6, 7});
        for (Vertex v : removed)
            if (v < 2 || v > 5)
                throw std::invalid_argument("tc5: variant 2 removals must lie in {v3..v6}");
        auto kept = [&](Vertex v) { return !contains_vertex(removed, v); };
        Graph pre = adj.build();
        bool cond1 = (kept(2) && pre.adjacent(1, 2)) || (kept(3) && pre.adjacent(1, 3));
        bool cond2 = (kept(4) && pre.adjacent(4, 6)) || (kept(5) && pre.adjacent(5, 6));
        if (!cond1) throw std::invalid_argument("tc5: v2 must see {v3,v4} \\ X");
        if (!cond2) throw std::invalid_argument("tc5: v7 must see {v5,v6} \\ X");
        if (kept(3) && kept(4) && !(v2v4 && v5v7))
            throw std::invalid_argument("tc5: keeping v4,v5 forces the v2v4 and v5v7 edges");
    }
    Graph h = adj.build();
    Removal r = remove_vertices(h, removed);
    ThreeCliquedWithF out{{r.graph, remap_set(a, r, r.graph.n()), remap_set(b, r, r.graph.n()),
                           remap_set(c, r, r.graph.n())},
                          remap_pairs(f, r)};
    validate_three_cliqued(out.tc);
    require_triads(out.tc.graph, "tc5");
    return out;
}

// ---- strips -----------------------------------------------------------------

namespace {

Strip thicken_strip(const Graph& base, const std::vector<Edge>& f, const std::vector<int>& sizes,
                    Vertex end1, Vertex end2, const char* who) {
    if ((int)sizes.size() != base.n())
        throw std::invalid_argument(std::string(who) + ": sizes must cover every vertex");
    if (sizes[end1] != 1 || sizes[end2] != 1)
        throw std::invalid_argument(std::string(who) + ": end vertices must have size 1");
    ThickeningSpec spec{base, sizes, f, {}};
    for (Edge e : f) spec.patterns.push_back(reduced_pattern(e, sizes[e.first], sizes[e.second]));
    Thickened t = thicken(spec);
    return {t.graph, {t.x[end1][0], t.x[end2][0]}};
}

}  // namespace

Strip strip_z1(const std::vector<int>& rightmost, const std::vector<Edge>& f,
               const std::vector<int>& sizes) {
    int n = (int)rightmost.size();
    if (n < 2) throw std::invalid_argument("strip_z1: n >= 2 required");
    for (int i = 0; i < n; ++i) {
        if (rightmost[i] < i || rightmost[i] >= n)
            throw std::invalid_argument("strip_z1: rightmost out of range");
        if (i > 0 && rightmost[i] < rightmost[i - 1])
            throw std::invalid_argument("strip_z1: rightmost must be nondecreasing");
    }
    if (rightmost[0] >= n - 1) throw std::invalid_argument("strip_z1: v1 and vn must be nonadjacent");
    for (int j = 1; j <= rightmost[0]; ++j)
        if (rightmost[j] >= n - 1)
            throw std::invalid_argument("strip_z1: v1 and vn cannot share a neighbour");

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= rightmost[i]; ++j) edges.push_back({i, j});
    Graph h = Graph::make(n, edges);

    std::vector<Edge> fprime;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n - 1; ++j)
            if (rightmost[i] <= j && rightmost[i - 1] < j) fprime.push_back({i, j});
    for (Edge e : f) {
        Edge m = norm(e);
        if (!std::count(fprime.begin(), fprime.end(), m))
            throw std::invalid_argument("strip_z1: pair not in F'");
    }
    return thicken_strip(h, f, sizes, 0, n - 1, "strip_z1");
}

Strip strip_z2(int n, const std::vector<Vertex>& removed, const std::vector<int>& sizes) {
    Graph h = z2_core(n);
    for (Vertex v : removed)
        if (v == 0 || v == n + 1)
            throw std::invalid_argument("strip_z2: a0 and b0 cannot be removed");
    int c_left = n;
    for (Vertex v : removed)
        if (v >= 2 * n + 2) --c_left;
    if (c_left < 2) throw std::invalid_argument("strip_z2: |C \\ X| >= 2 required");
    Removal r = remove_vertices(h, removed);
    return thicken_strip(r.graph, {}, sizes, r.new_id[0], r.new_id[n + 1], "strip_z2");
}

Strip strip_z3(const std::vector<std::vector<int>>& attachments, bool fuzz_middle,
               const std::vector<int>& sizes) {
    int hn = 5 + (int)attachments.size();
    std::vector<Edge> hedges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    for (size_t t = 0; t < attachments.size(); ++t) {
        if (attachments[t].empty())
            throw std::invalid_argument("strip_z3: attachments must be nonempty");
        for (int hub : attachments[t]) {
            if (hub < 1 || hub > 3)
                throw std::invalid_argument("strip_z3: attachments must join h2,h3,h4");
            hedges.push_back({hub, 5 + (int)t});
        }
    }
    Graph h = Graph::make(hn, hedges);
    LineGraph lg = line_graph(h);
    auto vertex_of = [&](Edge e) {
        Edge m = norm(e);
        for (Vertex v = 0; v < lg.graph.n(); ++v)
            if (norm(lg.edge_of[v]) == m) return v;
        throw std::logic_error("strip_z3: edge not found");
    };
    Vertex e12 = vertex_of({0, 1}), e23 = vertex_of({1, 2});
    Vertex e34 = vertex_of({2, 3}), e45 = vertex_of({3, 4});
    std::vector<Edge> edges;
    for (Edge e : lg.graph.edges())
        if (norm(e) != norm({e23, e34})) edges.push_back(e);
    Graph hp = Graph::make(lg.graph.n(), edges);
    std::vector<Edge> f;
    if (fuzz_middle) f.push_back(norm({e23, e34}));
    return thicken_strip(hp, f, sizes, e12, e45, "strip_z3");
}

Strip strip_z4(const std::vector<int>& sizes) {
    AdjMatrix adj(9);
    for (auto clique : {std::vector<Vertex>{0, 1, 2}, {3, 4, 5, 6}, {2, 7, 8}, {1, 4, 8}})
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) adj.set(clique[i], clique[j]);
    adj.set(5, 7);
    std::vector<Edge> f{{5, 8}, {6, 7}};
    return thicken_strip(adj.build(), f, sizes, 0, 3, "strip_z4");
}

Strip strip_z5(const std::vector<Vertex>& removed, bool fuzz, const std::vector<int>& sizes) {
    AdjMatrix adj(12);
    for (int i = 0; i < 6; ++i) adj.set(i, (i + 1) % 6);
    adj.set(6, 0);
    adj.set(6, 1);
    adj.set(7, 3);
    adj.set(7, 4);
    for (Vertex v : {5, 0, 1, 2}) adj.set(8, v);
    for (Vertex v : {2, 3, 4, 5, 8}) adj.set(9, v);
    for (Vertex v : {2, 3, 5, 0, 8, 9}) adj.set(10, v);
    for (Vertex v : {1, 2, 4, 5, 8, 9}) adj.set(11, v);
    for (Vertex v : removed)
        if (v != 10 && v != 11)
            throw std::invalid_argument("strip_z5: removals must lie in {v11,v12}");
    Removal r = remove_vertices(adj.build(), removed);
    std::vector<Edge> f;
    if (fuzz) f.push_back({r.new_id[8], r.new_id[9]});
    return thicken_strip(r.graph, f, sizes, r.new_id[6], r.new_id[7], "strip_z5");
}

Graph strip_compose(const std::vector<StripEdge>& edges) {
    if (edges.size() < 2)
        throw std::invalid_argument("strip_compose: nontrivial structure needs >= 2 hyper-edges");
    int total = 0;
    std::vector<std::vector<int>> interior_id;  // per strip: J vertex -> composed id (-1 for Z)
    int max_node = 0;
    for (const auto& se : edges) {
        const Graph& j = se.strip.j;
        if (se.strip.z.size() < 1 || se.strip.z.size() > 2)
            throw std::invalid_argument("strip_compose: |Z| must be 1 or 2");
        if (se.at.size() != se.strip.z.size())
            throw std::invalid_argument("strip_compose: one hypergraph node per end");
        if (se.at.size() == 2 && se.at[0] == se.at[1])
            throw std::invalid_argument("strip_compose: ends must attach to distinct nodes");
        VertexSet z(j.n());
        for (Vertex v : se.strip.z) {
            if (v < 0 || v >= j.n()) throw std::invalid_argument("strip_compose: Z out of range");
            if (z.contains(v)) throw std::invalid_argument("strip_compose: repeated Z vertex");
            z.add(v);
        }
        if ((int)z.size() == j.n())
            throw std::invalid_argument("SD1: eta(F) must be nonempty");
        for (Vertex zv : se.strip.z) {
            VertexSet eta = j.neighbors(zv) - z;
            if (!j.is_clique(eta))
                throw std::invalid_argument("SD2: eta(F,h) must be a clique of the strip");
        }
        std::vector<int> ids(j.n(), -1);
        for (Vertex v = 0; v < j.n(); ++v)
            if (!z.contains(v)) ids[v] = total++;
        interior_id.push_back(std::move(ids));
        for (int node : se.at) {
            if (node < 0) throw std::invalid_argument("strip_compose: negative hypergraph node");
            max_node = std::max(max_node, node + 1);
        }
    }

    AdjMatrix adj(total);
    std::vector<std::vector<Vertex>> at_node(max_node);
    for (size_t s = 0; s < edges.size(); ++s) {
        const Graph& j = edges[s].strip.j;
        for (Edge e : j.edges())
            if (interior_id[s][e.first] != -1 && interior_id[s][e.second] != -1)
                adj.set(interior_id[s][e.first], interior_id[s][e.second]);
        for (size_t zi = 0; zi < edges[s].strip.z.size(); ++zi) {
            Vertex zv = edges[s].strip.z[zi];
            j.neighbors(zv).for_each([&](Vertex u) {
                if (interior_id[s][u] != -1)
                    at_node[edges[s].at[zi]].push_back(interior_id[s][u]);
            });
        }
    }
    for (const auto& members : at_node)
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (members[i] != members[j]) adj.set(members[i], members[j]);
    return adj.build();
}

}  // namespace tihany
