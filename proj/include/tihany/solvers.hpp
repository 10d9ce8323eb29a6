#ifndef TIHANY_SOLVERS_HPP
#define TIHANY_SOLVERS_HPP

#include <optional>
#include <vector>

#include "tihany/graph.hpp"

namespace tihany {

/// Per-invocation search limits.  Running out of budget is a first-class
/// "unknown" outcome, never silently coerced into an answer.
struct Budget {
    uint64_t node_limit = 10'000'000;
    double time_limit = 10.0;  // wall seconds

    void validate() const {
        if (node_limit == 0 || time_limit <= 0) throw std::invalid_argument("Budget: limits must be positive");
    }
};

struct Coloring {
    std::vector<VertexSet> classes;

    int k() const { return int(classes.size()); }
    bool proper(const Graph& g) const;
    int class_of(Vertex v) const;
};

enum class SearchStatus { Found, Exhausted, OutOfBudget };

struct ColoringSearch {
    SearchStatus status;
    Coloring coloring;  // valid only when status == Found
};

/// Exhaustive k-coloring search (branch and bound, saturation-degree vertex
/// order, ties to the lowest vertex id, first-new-class symmetry breaking).
ColoringSearch find_coloring(const Graph& g, int k, const Budget& budget);

struct ChiResult {
    bool known;  // false = budget exhausted before certification
    int chi;
    Coloring witness;
};

ChiResult chromatic_number(const Graph& g, const Budget& budget);

struct CliqueResult {
    int omega;
    VertexSet witness;
};

CliqueResult clique_number(const Graph& g);
CliqueResult stability_number(const Graph& g);  // omega field holds alpha

struct Matching {
    std::vector<Edge> edges;
    int size() const { return int(edges.size()); }
    VertexSet covered(int n) const {
        VertexSet s(n);
        for (auto [u, v] : edges) {
            s.add(u);
            s.add(v);
        }
        return s;
    }
};

/// Maximum cardinality matching via blossom contraction, O(n^3).
Matching maximum_matching(const Graph& g);

/// Injective map witnessing an induced copy of pattern in g (adjacency and
/// non-adjacency both preserved), or nullopt after exhaustive search.
/// Returned vector maps pattern vertex -> g vertex.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& pattern);

}  // namespace tihany

#endif
