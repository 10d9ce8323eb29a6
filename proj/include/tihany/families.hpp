#ifndef TIHANY_FAMILIES_HPP
#define TIHANY_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tihany/analysis.hpp"
#include "tihany/graph.hpp"

namespace tihany {

// ---- thickenings -----------------------------------------------------------

/// Bipartite adjacency between the blow-up cliques of one F-pair {u,v}:
/// edges are (index into X_u, index into X_v).
struct ThickenPattern {
    Edge base_pair;
    std::vector<std::pair<int, int>> edges;
};

/// Rectangle pattern (first `ru_used` rows complete to first `rv_used`
/// columns), neither complete nor anticomplete; reduced by construction.
ThickenPattern reduced_pattern(Edge base_pair, int ru, int rv);

/// Two-edge matching pattern; a non-reduced W-join once thickened.
/// Requires both sides of size >= 2.
ThickenPattern nonreduced_pattern(Edge base_pair, int ru, int rv);

struct ThickeningSpec {
    Graph base;
    std::vector<int> sizes;                 // per base vertex, >= 1
    std::vector<Edge> f;                    // disjoint changeable pairs
    std::vector<ThickenPattern> patterns;   // one per f entry, same order
};

struct Thickened {
    Graph graph;
    std::vector<Vertex> base_of;            // output vertex -> base vertex
    std::vector<std::vector<Vertex>> x;     // base vertex -> its clique X_v
};

Thickened thicken(const ThickeningSpec& spec);

// ---- interval graphs -------------------------------------------------------

/// Vertices sit at positions 0..points-1 on a line or circle; each interval
/// [a,b] covers positions a..b (clockwise when circular).  Adjacency is
/// co-membership in some interval.
struct IntervalSpec {
    bool circular = true;
    int points = 0;
    std::vector<std::pair<int, int>> intervals;
};

/// Throws invalid_argument naming the violated side condition (shared
/// endpoints; three intervals covering the whole circle).
Graph interval_graph(const IntervalSpec& spec);

/// Endpoint pairs {a_i, b_i} of the intervals: the candidate F' for fuzzy
/// long circular interval graphs.
std::vector<Edge> interval_endpoint_pairs(const IntervalSpec& spec);

/// Fuzzy variant: thicken over the chosen endpoint pairs (indices into
/// interval_endpoint_pairs) with reduced default patterns.
Thickened fuzzy_interval(const IntervalSpec& spec, const std::vector<int>& fuzzy_pairs,
                         const std::vector<int>& sizes);

// ---- named families --------------------------------------------------------

/// level 0: the icosahedron on v0..v11; level 1 drops v11; level 2 also
/// drops v10.  Vertex ids equal the subscripts.
Graph icosahedron_graph(int level);

/// The changeable pairs {v1,v4},{v6,v9} available for icosahedron level 2.
std::vector<Edge> icosahedron_fprime();

struct RingOfFiveSpec {
    std::array<int, 6> v_sizes{};  // |V_0|..|V_5|
    // chosen edges between consecutive rings: (i, index in V_i, index in V_{i+1})
    std::vector<std::array<int, 3>> v_adjacency;
};

/// Layout: a1..a5 -> 0..4, b1..b5 -> 5..9, then V_0,V_1,...,V_5 blocks.
/// b_1..b_5 are generated pairwise nonadjacent (the definition leaves them
/// unspecified).
Graph ring_of_five(const RingOfFiveSpec& spec);

struct MantledSpec {
    std::array<int, 3> upper_sizes{};  // |V^1|,|V^2|,|V^3|
    std::array<int, 3> lower_sizes{};  // |V_1|,|V_2|,|V_3|
    std::vector<Edge> mantle_edges;    // extra edges within the upper or lower mantle
};

/// Layout: a_i^j -> 3*(i-1)+(j-1) (0..8), then V^1,V^2,V^3,V_1,V_2,V_3
/// blocks.  Throws if a mantle edge creates a triangle inside either mantle,
/// joins the two mantles, or lands inside one stable V block.
Graph mantled_lk33(const MantledSpec& spec);

/// Line graph: vertices are edges of h, adjacency is sharing an endpoint.
struct LineGraph {
    Graph graph;
    std::vector<Edge> edge_of;  // line-graph vertex -> edge of h
};

LineGraph line_graph(const Graph& h);

Graph l_k33();  // line graph of K_{3,3}, on 9 vertices

// ---- triangle chains (paths and cycles of triangles) -----------------------

/// Concrete parameterization with every hat of size 1: odd sets are
/// L|M|R with |M| = 1 inside the chain, R_{2i-1} is matched to L_{2i+1}
/// (sizes r_sizes[i]), even sets carry one hat vertex plus extra_even[i]
/// vertices whose matching-edge attachment follows attach_r[i].
struct TriangleChainSpec {
    bool cyclic = false;
    int n = 1;
    std::vector<int> r_sizes;     // n entries, each >= 1
    std::vector<int> extra_even;  // n entries, each >= 0
    std::vector<bool> attach_r;   // n entries: non-hat vertices take the R end
};

struct TriangleChain {
    Graph graph;
    std::vector<std::vector<Vertex>> x;     // the stable sets X_1.. (0-indexed)
    std::vector<std::vector<Vertex>> hat;   // per even set
    // per odd set: L, M, R
    std::vector<std::array<std::vector<Vertex>, 3>> lmr;
};

struct TriangleChainResult {
    std::optional<TriangleChain> chain;
    std::string violated;  // first violated clause, e.g. "(C1)", when !chain
};

TriangleChainResult triangle_chain(const TriangleChainSpec& spec);

/// Literal clause checker for a labeled candidate; empty string when valid.
std::string validate_triangle_chain(const TriangleChain& tc, bool cyclic, int n);

// ---- three-cliqued graphs and hex chains -----------------------------------

struct ThreeCliqued {
    Graph graph;
    VertexSet a, b, c;
};

/// a,b,c must be pairwise disjoint cliques with union V.
void validate_three_cliqued(const ThreeCliqued& t);

/// Compose terms: for i < j, A_i complete to V(G_j)\B_j, B_i to V(G_j)\C_j,
/// C_i to V(G_j)\A_j.  Wear edges (extra A_i-B_j / B_i-C_j / C_i-A_j pairs,
/// in composed vertex ids) are only allowed between vertices in no triad of
/// their own term.
ThreeCliqued hex_chain(const std::vector<ThreeCliqued>& terms, const std::vector<Edge>& wear = {});

// ---- three-cliqued generator classes ---------------------------------------

struct ThreeCliquedWithF {
    ThreeCliqued tc;
    std::vector<Edge> f;  // semiadjacent pairs, for thickening
};

/// TC1: line graph of h where v1,v2,v3 are pairwise nonadjacent, cover all
/// edges, have degree >= 3, and for each ordered pair at most one other
/// vertex sees v_i but not v_j; cliques = edges at v1/v2/v3.
ThreeCliquedWithF tc1(const Graph& h, Vertex v1, Vertex v2, Vertex v3);

/// TC2: circular interval graph cut into three lines, given as position
/// ranges [from,to] (clockwise, inclusive); each line with >= 2 vertices must
/// lie inside one interval.
ThreeCliquedWithF tc2(const IntervalSpec& spec, const std::array<std::pair<int, int>, 3>& lines);

/// TC3: near-antiprismatic core (the Z2 graph with a0,b0 retained):
/// n >= 2, removed X avoiding a0,b0 with |C\X| >= 2.
ThreeCliquedWithF tc3(int n, const std::vector<Vertex>& removed);

/// TC4: any antiprismatic graph with a given partition into three cliques.
ThreeCliquedWithF tc4(const ThreeCliqued& t);

/// TC5: the two sporadic graphs.  variant 1: 8 vertices, removed within
/// {v3,v4}; variant 2: 9 vertices, removed within {v3..v6}, with the two
/// arbitrary adjacencies v2v4, v5v7 as flags.
ThreeCliquedWithF tc5(int variant, const std::vector<Vertex>& removed, bool v2v4 = true,
                      bool v5v7 = true);

// ---- strips Z1-Z5 and strip composition ------------------------------------

struct Strip {
    Graph j;
    std::vector<Vertex> z;  // the end vertices, |z| in {1,2}
};

/// Z1: fuzzy linear interval strip.  rightmost[i] is the last neighbor of
/// vertex i (umbrella adjacency); f indexes pairs in the computed F'.
Strip strip_z1(const std::vector<int>& rightmost, const std::vector<Edge>& f,
               const std::vector<int>& sizes);

/// Z2: the A/B/C core graph; removed avoids a0,b0 and leaves |C\X| >= 2.
/// Layout: a_0..a_n, b_0..b_n, c_1..c_n.
Strip strip_z2(int n, const std::vector<Vertex>& removed, const std::vector<int>& sizes);

/// Z3: line graph of h (a path h1-..-h5 plus attachments to h2,h3,h4, each
/// attachment a nonempty subset of {h2,h3,h4}), with the h2h3-h3h4 edge
/// removed; optionally fuzz that pair.
Strip strip_z3(const std::vector<std::vector<int>>& attachments, bool fuzz_middle,
               const std::vector<int>& sizes);

/// Z4: the fixed 9-vertex strip; F = {{b2,c2},{b3,c1}} always.
Strip strip_z4(const std::vector<int>& sizes);

/// Z5: the fixed 12-vertex strip; removed within {v11,v12}; optional fuzz of
/// {v9,v10}.
Strip strip_z5(const std::vector<Vertex>& removed, bool fuzz, const std::vector<int>& sizes);

/// A hyper-edge of a strip composition: the strip plus the 1 or 2 hypergraph
/// nodes its ends attach to (parallel to strip.z order).
struct StripEdge {
    Strip strip;
    std::vector<int> at;
};

/// Compose a nontrivial strip-structure (>= 2 hyper-edges): disjoint copies
/// of J\Z, with each hypergraph node's attached neighborhoods merged into a
/// clique.  Validates SD1-SD3; throws with the axiom id on violation.
Graph strip_compose(const std::vector<StripEdge>& edges);

}  // namespace tihany

#endif
