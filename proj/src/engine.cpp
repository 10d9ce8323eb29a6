#include "tihany/engine.hpp"

#include <algorithm>

namespace tihany {

namespace {

// Re-express a coloring of an induced subgraph in the host graph's vertex ids.
Coloring lift(const Coloring& c, const std::vector<Vertex>& to_old, int n) {
    Coloring out;
    for (const auto& cls : c.classes) {
        VertexSet lifted(n);
        cls.for_each([&](Vertex v) { lifted.add(to_old[v]); });
        out.classes.push_back(std::move(lifted));
    }
    return out;
}

}  // namespace

std::vector<VertexSet> cliques_up_to(const Graph& g, int kmax) {
    std::vector<std::vector<VertexSet>> by_size(kmax + 1);
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (!cur.empty()) by_size[cur.size()].push_back(VertexSet::of(g.n(), cur));
        if (int(cur.size()) == kmax) return;
        for (Vertex v = from; v < g.n(); ++v) {
            bool ok = true;
            for (Vertex u : cur)
                if (!g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<VertexSet> out;
    for (auto& bucket : by_size)
        for (auto& k : bucket) out.push_back(std::move(k));
    return out;
}

TihanyResult is_tihany(const Graph& g, const VertexSet& k, const Budget& budget) {
    budget.validate();
    if (!g.is_clique(k)) throw std::invalid_argument("is_tihany: k is not a clique");
    TihanyResult r;
    ChiResult chi = chromatic_number(g, budget);
    if (!chi.known) return r;
    auto sub = g.induced(k.complement());
    int needed = chi.chi - k.size();
    r.cert.clique = k;
    r.cert.chi_before = chi.chi;
    if (needed >= 0) {
        ColoringSearch cs = find_coloring(sub.graph, needed, budget);
        if (cs.status == SearchStatus::OutOfBudget) return r;
        if (cs.status == SearchStatus::Found) {
            // chi(g\k) >= chi - |k| always, so the found coloring is optimal
            r.known = true;
            r.tihany = false;
            r.cert.chi_after = needed;
            r.refutation = lift(cs.coloring, sub.to_old, g.n());
            return r;
        }
    }
    // no (chi-|k|)-coloring exists: Tihany; pin down chi(g\k) exactly
    for (int c = std::max(needed + 1, 0);; ++c) {
        ColoringSearch cs = find_coloring(sub.graph, c, budget);
        if (cs.status == SearchStatus::OutOfBudget) return r;
        if (cs.status == SearchStatus::Found) {
            r.known = true;
            r.tihany = true;
            r.cert.chi_after = c;
            return r;
        }
    }
}

MinTihany find_min_tihany(const Graph& g, int kmax, const Budget& budget) {
    budget.validate();
    if (kmax < 1) throw std::invalid_argument("find_min_tihany: kmax must be >= 1");
    MinTihany out;
    ChiResult chi = chromatic_number(g, budget);
    if (!chi.known) return out;
    for (const auto& k : cliques_up_to(g, kmax)) {
        auto sub = g.induced(k.complement());
        int needed = chi.chi - k.size();
        if (needed >= 0) {
            ColoringSearch cs = find_coloring(sub.graph, needed, budget);
            if (cs.status == SearchStatus::OutOfBudget) return out;  // minimality undecided
            if (cs.status == SearchStatus::Found) continue;
        }
        for (int c = std::max(needed + 1, 0);; ++c) {
            ColoringSearch cs = find_coloring(sub.graph, c, budget);
            if (cs.status == SearchStatus::OutOfBudget) return out;
            if (cs.status == SearchStatus::Found) {
                out.status = MinTihany::Status::Found;
                out.cert = {k, chi.chi, c};
                return out;
            }
        }
    }
    out.status = MinTihany::Status::None;
    return out;
}

CliqueClassification classify_clique(const Graph& g, const VertexSet& k,
                                     const std::vector<Edge>& f) {
    std::vector<int> pair_count(g.n(), 0);
    for (auto [x, y] : f) {
        if (x < 0 || x >= g.n() || y < 0 || y >= g.n() || x == y)
            throw std::invalid_argument("classify_clique: bad F-pair");
        ++pair_count[x];
        ++pair_count[y];
    }
    for (int c : pair_count)
        if (c > 1) throw std::invalid_argument("classify_clique: vertex in two F-pairs");

    CliqueClassification r;
    r.partition = partition_wrt_clique(g, k);  // validates that k is a clique
    SetShape shape = set_shape(g, r.partition.c);
    r.dense = shape.is_clique;
    r.good = shape.is_antimatching;
    r.s_f = VertexSet(g.n());
    for (auto [x, y] : f)
        for (int flip = 0; flip < 2; ++flip) {
            Vertex xx = flip ? y : x, kv = flip ? x : y;
            if (!k.contains(kv) || k.contains(xx)) continue;
            VertexSet rest = k;
            rest.remove(kv);
            if (g.neighbors(xx).intersection_size(rest) == rest.size()) r.s_f.add(xx);
        }
    return r;
}

LemmaBasic check_lemma_basic(const Graph& g, const VertexSet& k, const Budget& budget) {
    budget.validate();
    if (!g.is_clique(k)) throw std::invalid_argument("check_lemma_basic: k is not a clique");
    LemmaBasic r;
    r.bad_class = VertexSet(g.n());
    ChiResult chi = chromatic_number(g, budget);
    if (!chi.known) return r;
    int needed = chi.chi - k.size();
    if (needed < 0) {
        r.outcome = LemmaBasic::Outcome::Vacuous;
        return r;
    }
    auto sub = g.induced(k.complement());
    ColoringSearch cs = find_coloring(sub.graph, needed, budget);
    if (cs.status == SearchStatus::OutOfBudget) return r;
    if (cs.status == SearchStatus::Exhausted) {
        r.outcome = LemmaBasic::Outcome::Vacuous;  // k is Tihany
        return r;
    }
    r.coloring = lift(cs.coloring, sub.to_old, g.n());
    for (const auto& cls : r.coloring->classes) {
        Vertex w = -1;
        cls.for_each([&](Vertex v) {
            if (w == -1 && g.neighbors(v).intersection_size(k) == k.size()) w = v;
        });
        if (w == -1) {
            r.outcome = LemmaBasic::Outcome::Violation;
            r.bad_class = cls;
            return r;
        }
        r.witnesses.push_back(w);
    }
    r.outcome = LemmaBasic::Outcome::Ok;
    return r;
}

GEDecomposition gallai_edmonds(const Graph& g) {
    GEDecomposition r;
    r.matching = maximum_matching(g);
    r.mu = r.matching.size();
    r.d = VertexSet(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexSet one(g.n());
        one.add(v);
        if (maximum_matching(g.without(one)).size() == r.mu) r.d.add(v);
    }
    VertexSet nd(g.n());
    r.d.for_each([&](Vertex v) { nd = nd | g.neighbors(v); });
    r.a = nd - r.d;
    r.c = (r.d | r.a).complement();
    r.components_of_d = int(g.induced(r.d).graph.components().size());
    if (g.n() + r.a.size() - r.components_of_d != 2 * r.mu)
        throw std::logic_error("gallai_edmonds: structure identity failed");
    return r;
}

Coloring merge_cutset_colorings(const Graph& g, const VertexSet& k, const VertexSet& a,
                                const VertexSet& b, const Budget& budget) {
    budget.validate();
    if (!g.is_clique(k)) throw std::invalid_argument("merge_cutset_colorings: k not a clique");
    if (a.empty() || b.empty() || a.intersects(b) || a.intersects(k) || b.intersects(k) ||
        (k | a | b) != VertexSet::full(g.n()))
        throw std::invalid_argument("merge_cutset_colorings: not a partition");
    bool crossing = false;
    a.for_each([&](Vertex v) {
        if (g.neighbors(v).intersects(b)) crossing = true;
    });
    if (crossing) throw std::invalid_argument("merge_cutset_colorings: edges across the cutset");

    auto ga = g.induced(k | a);
    auto gb = g.induced(k | b);
    ChiResult ca = chromatic_number(ga.graph, budget);
    ChiResult cb = chromatic_number(gb.graph, budget);
    if (!ca.known || !cb.known) throw std::runtime_error("merge_cutset_colorings: budget exhausted");

    int total = std::max(ca.chi, cb.chi);
    Coloring ac = lift(ca.witness, ga.to_old, g.n());
    Coloring bc = lift(cb.witness, gb.to_old, g.n());
    ac.classes.resize(total, VertexSet(g.n()));
    bc.classes.resize(total, VertexSet(g.n()));

    // align the k classes, then send the remaining b classes to free slots
    std::vector<int> map_b(total, -1);
    std::vector<bool> slot_used(total, false);
    k.for_each([&](Vertex kv) {
        int ia = ac.class_of(kv), ib = bc.class_of(kv);
        map_b[ib] = ia;
        slot_used[ia] = true;
    });
    int free_slot = 0;
    for (int ib = 0; ib < total; ++ib) {
        if (map_b[ib] != -1) continue;
        while (slot_used[free_slot]) ++free_slot;
        map_b[ib] = free_slot;
        slot_used[free_slot] = true;
    }

    Coloring merged;
    merged.classes.assign(total, VertexSet(g.n()));
    for (int i = 0; i < total; ++i) merged.classes[i] = ac.classes[i];
    for (int ib = 0; ib < total; ++ib)
        merged.classes[map_b[ib]] = merged.classes[map_b[ib]] | bc.classes[ib];
    return merged;
}

namespace {

int cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    int c = 0;
    a.for_each([&](Vertex v) { c += g.neighbors(v).intersection_size(b); });
    return c;
}

// The W-join conditions plus whether the cross edges fail the reduced form.
bool valid_wjoin(const Graph& g, const VertexSet& a, const VertexSet& b, bool& non_reduced) {
    if (a.empty() || b.empty() || a.intersects(b)) return false;
    if (!g.is_clique(a) || !g.is_clique(b)) return false;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (a.contains(v) || b.contains(v)) continue;
        int da = g.neighbors(v).intersection_size(a);
        int db = g.neighbors(v).intersection_size(b);
        if (da != 0 && da != a.size()) return false;
        if (db != 0 && db != b.size()) return false;
    }
    int cross = cross_edges(g, a, b);
    if (cross == 0 || cross == a.size() * b.size()) return false;
    // reduced iff edges = A1 x B1 over the non-isolated vertices of each side
    non_reduced = false;
    a.for_each([&](Vertex av) {
        if (!g.neighbors(av).intersects(b)) return;
        b.for_each([&](Vertex bv) {
            if (g.neighbors(bv).intersects(a) && !g.adjacent(av, bv)) non_reduced = true;
        });
    });
    return true;
}

}  // namespace

std::optional<WJoin> find_nonreduced_wjoin(const Graph& g) {
    int n = g.n();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
            if (a == b || g.adjacent(a, b)) continue;
            VertexSet common = g.neighbors(a) & g.neighbors(b);
            std::vector<Vertex> cm = common.to_vector();
            for (Vertex ap : cm)
                for (Vertex bp : cm) {
                    if (ap == bp) continue;
                    // grow the forced closure of A={a,ap}, B={b,bp}: a vertex
                    // mixed on one side must join the other side as a clique
                    // member; mixed on both sides kills the seed
                    VertexSet A = VertexSet::of(n, {a, ap});
                    VertexSet B = VertexSet::of(n, {b, bp});
                    bool dead = false;
                    for (bool changed = true; changed && !dead;) {
                        changed = false;
                        for (Vertex v = 0; v < n && !dead; ++v) {
                            if (A.contains(v) || B.contains(v)) continue;
                            int da = g.neighbors(v).intersection_size(A);
                            int db = g.neighbors(v).intersection_size(B);
                            bool ma = da > 0 && da < A.size();
                            bool mb = db > 0 && db < B.size();
                            if (ma && mb) dead = true;
                            else if (ma) {
                                if (db != B.size()) dead = true;
                                else B.add(v), changed = true;
                            } else if (mb) {
                                if (da != A.size()) dead = true;
                                else A.add(v), changed = true;
                            }
                        }
                    }
                    if (dead) continue;
                    bool non_reduced = false;
                    if (valid_wjoin(g, A, B, non_reduced) && non_reduced)
                        return WJoin{A, B, false, std::nullopt};
                }
        }
    return std::nullopt;
}

Graph reduce_wjoin(const Graph& g, const WJoin& w, const Budget& budget) {
    budget.validate();
    bool non_reduced = false;
    if (!valid_wjoin(g, w.a, w.b, non_reduced) || !non_reduced)
        throw std::invalid_argument("reduce_wjoin: not a non-reduced W-join");

    std::vector<Vertex> av = w.a.to_vector(), bv = w.b.to_vector();
    int cross = cross_edges(g, w.a, w.b);
    ChiResult chi = chromatic_number(g, budget);
    if (!chi.known) throw std::runtime_error("reduce_wjoin: budget exhausted");
    bool claw_free = !find_claw(g).has_value();

    // candidate reduced patterns: complete bipartite rectangles A1 x B1 with
    // fewer edges, tried by decreasing edge count
    std::vector<std::pair<int, int>> cands;
    cands.push_back({0, 0});
    for (int i = 1; i <= int(av.size()); ++i)
        for (int j = 1; j <= int(bv.size()); ++j)
            if (i * j < cross) cands.push_back({i, j});
    std::stable_sort(cands.begin(), cands.end(), [](auto& p, auto& q) {
        if (p.first * p.second != q.first * q.second) return p.first * p.second > q.first * q.second;
        return p.first > q.first;
    });

    for (auto [i, j] : cands) {
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (!(w.a.contains(u) && w.b.contains(v)) && !(w.a.contains(v) && w.b.contains(u)))
                edges.push_back({u, v});
        for (int ii = 0; ii < i; ++ii)
            for (int jj = 0; jj < j; ++jj) edges.push_back({av[ii], bv[jj]});
        Graph h = Graph::make(g.n(), edges);
        if (claw_free && find_claw(h).has_value()) continue;
        ChiResult hc = chromatic_number(h, budget);
        if (!hc.known) throw std::runtime_error("reduce_wjoin: budget exhausted");
        if (hc.chi == chi.chi) return h;
    }
    throw std::runtime_error("reduce_wjoin: no chi-preserving reduced pattern found");
}

std::optional<EltPartition> elt_partition_exists(const Graph& g, int s, int t,
                                                 const Budget& budget) {
    budget.validate();
    if (s < 2 || t < 2) throw std::invalid_argument("elt_partition_exists: s,t must be >= 2");
    if (g.n() > 16) throw std::invalid_argument("elt_partition_exists: n > 16");

    // does chi(g|side) >= bound?  omega certifies early; otherwise an
    // exhaustive (bound-1)-coloring search settles it
    auto side_ok = [&](const VertexSet& side, int bound) -> bool {
        if (side.size() < bound) return false;
        auto [h, map] = g.induced(side);
        if (clique_number(h).omega >= bound) return true;
        ColoringSearch cs = find_coloring(h, bound - 1, budget);
        if (cs.status == SearchStatus::OutOfBudget)
            throw std::runtime_error("elt_partition_exists: budget exhausted");
        return cs.status == SearchStatus::Exhausted;
    };

    for (uint32_t mask = 1; g.n() >= 2 && mask + 1 < (uint32_t(1) << g.n()); ++mask) {
        VertexSet sside(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (mask & (uint32_t(1) << v)) sside.add(v);
        if (!side_ok(sside, s)) continue;
        VertexSet tside = sside.complement();
        if (!side_ok(tside, t)) continue;
        return EltPartition{sside, tside, s, t};
    }
    return std::nullopt;
}

}  // namespace tihany
