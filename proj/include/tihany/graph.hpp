#ifndef TIHANY_GRAPH_HPP
#define TIHANY_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tihany {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-universe vertex set backed by 64-bit words.  The universe size is
/// the vertex count of the graph the set belongs to; set algebra only makes
/// sense between sets over the same universe.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.add(v);
        return s;
    }
    static VertexSet of(int universe, const std::vector<Vertex>& vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    void add(Vertex v) {
        check(v);
        words_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void remove(Vertex v) {
        check(v);
        words_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }
    bool contains(Vertex v) const {
        if (v < 0 || v >= n_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1;
    }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    VertexSet operator|(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_size(const VertexSet& o) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += __builtin_popcountll(words_[i] & o.words_[i]);
        return c;
    }

    /// Lowest member, or -1 when empty.
    Vertex first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i) * 64 + __builtin_ctzll(words_[i]);
        return -1;
    }
    /// Lowest member strictly greater than v, or -1.
    Vertex next(Vertex v) const {
        for (Vertex u = v + 1; u < n_; ++u)
            if (contains(u)) return u;
        return -1;
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    template <class Fn>
    void for_each(Fn fn) const {
        for (Vertex v = first(); v != -1; v = next(v)) fn(v);
    }

    bool operator<(const VertexSet& o) const {  // lexicographic by member list
        return to_vector() < o.to_vector();
    }

private:
    template <class Op>
    VertexSet zip(const VertexSet& o, Op op) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
        VertexSet r(n_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }
    void check(Vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v));
    }
    void trim() {
        if (n_ & 63) words_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_;
    std::vector<uint64_t> words_;
};

/// Immutable simple graph on dense vertex ids 0..n-1, adjacency stored as one
/// bit row per vertex.  Values are safe to share freely.
class Graph {
public:
    Graph() : n_(0) {}

    static Graph make(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        Graph g;
        g.n_ = n;
        g.rows_.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: vertex id out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop");
            g.rows_[u].add(v);
            g.rows_[v].add(u);
        }
        return g;
    }

    int n() const { return n_; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return rows_[v].size(); }

    int edge_count() const {
        int s = 0;
        for (const auto& r : rows_) s += r.size();
        return s / 2;
    }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.push_back({u, v});
        return out;
    }

    Graph complement() const {
        Graph g;
        g.n_ = n_;
        g.rows_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            VertexSet r = rows_[v].complement();
            r.remove(v);
            g.rows_.push_back(std::move(r));
        }
        return g;
    }

    struct Induced;
    Induced induced(const VertexSet& s) const;
    Graph without(const VertexSet& s) const;

    bool is_clique(const VertexSet& s) const {
        for (Vertex u = s.first(); u != -1; u = s.next(u))
            for (Vertex v = s.next(u); v != -1; v = s.next(v))
                if (!adjacent(u, v)) return false;
        return true;
    }
    bool is_stable(const VertexSet& s) const {
        for (Vertex u = s.first(); u != -1; u = s.next(u))
            if (rows_[u].intersects(s)) return false;
        return true;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        VertexSet seen(n_);
        std::vector<Vertex> stack{0};
        seen.add(0);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            rows_[v].for_each([&](Vertex u) {
                if (!seen.contains(u)) {
                    seen.add(u);
                    stack.push_back(u);
                }
            });
        }
        return seen.size() == n_;
    }

    std::vector<VertexSet> components() const {
        std::vector<VertexSet> comps;
        VertexSet done(n_);
        for (Vertex s = 0; s < n_; ++s) {
            if (done.contains(s)) continue;
            VertexSet comp(n_);
            std::vector<Vertex> stack{s};
            comp.add(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                rows_[v].for_each([&](Vertex u) {
                    if (!comp.contains(u)) {
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

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_;
    std::vector<VertexSet> rows_;
};

struct Graph::Induced {
    Graph graph;
    std::vector<Vertex> to_old;  // new id -> old id
};

inline Graph::Induced Graph::induced(const VertexSet& s) const {
    std::vector<Vertex> keep = s.to_vector();
    Graph g;
    g.n_ = int(keep.size());
    g.rows_.assign(g.n_, VertexSet(g.n_));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) {
                g.rows_[i].add(int(j));
                g.rows_[j].add(int(i));
            }
    return {std::move(g), std::move(keep)};
}

inline Graph Graph::without(const VertexSet& s) const { return induced(s.complement()).graph; }

/// Partition of V(G) \ K relative to a clique K: common neighbors, common
/// non-neighbors, and mixed vertices.  C of the empty clique is all of V.
struct CliquePartition {
    VertexSet c, a, m;
};

CliquePartition partition_wrt_clique(const Graph& g, const VertexSet& k);

/// C(K) union K.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& k);

}  // namespace tihany

#endif
