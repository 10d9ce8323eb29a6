#ifndef TIHANY_ANALYSIS_HPP
#define TIHANY_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "tihany/graph.hpp"
#include "tihany/solvers.hpp"

namespace tihany {

struct ClawWitness {
    Vertex center;
    VertexSet leaves;  // three pairwise nonadjacent common neighbors of center
};

std::optional<ClawWitness> find_claw(const Graph& g);

/// All stable 3-sets, each once, in lexicographic order.
std::vector<VertexSet> enumerate_triads(const Graph& g);

struct SetShape {
    bool is_clique;
    bool is_stable;
    bool is_antimatching;   // each member has at most one non-neighbor inside
    bool is_cobipartite;    // splits into two cliques
};

SetShape set_shape(const Graph& g, const VertexSet& s);

enum class PrismMode { Antiprismatic, Prismatic };

struct PrismReport {
    bool holds;
    VertexSet witness;  // violating 4-set (in g's ids) when !holds
};

/// Antiprismatic: every 4-subset is not a claw and spans >= 2 edges.
/// Prismatic mode tests the complement.
PrismReport is_antiprismatic(const Graph& g, PrismMode mode);

struct OrientabilityReport {
    bool orientable;
    std::vector<Vertex> witness;  // embedded rotator/twister map when not
    bool witness_is_twister = false;
};

/// Requires g prismatic (throws otherwise).  Orientable iff g contains no
/// induced rotator and no induced twister.
OrientabilityReport is_orientable_prismatic(const Graph& g);

struct SubstantialReport {
    bool holds;
    VertexSet violating_s;  // |S| < k hitting every triad, when !holds
};

/// Every S with |S| < k misses some triad.  Exhaustive; k <= 4.
SubstantialReport is_k_substantial(const Graph& g, int k);

struct CoreReport {
    VertexSet core;          // union of all triangles
    VertexSet strong_core;   // core minus weak vertices
    VertexSet weak;
    std::vector<VertexSet> triangles;
    std::vector<int> triangle_count;  // per vertex, for either weakness reading
};

CoreReport core_strong_core(const Graph& g);

struct CliqueCutset {
    VertexSet k, a, b;  // removal of clique k separates a from b; a,b nonempty
};

/// Clique cutset of a connected graph, or nullopt.  Throws on disconnected
/// input.  Search enumerates minimal separators for n <= 64 and falls back to
/// testing all cliques of size <= 5 beyond that.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);

// Fixed obstruction patterns, both on 9 vertices (0-based labels).
Graph rotator_graph();
Graph twister_graph();

}  // namespace tihany

#endif
