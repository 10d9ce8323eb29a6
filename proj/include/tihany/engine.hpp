#ifndef TIHANY_ENGINE_HPP
#define TIHANY_ENGINE_HPP

#include <array>
#include <optional>
#include <vector>

#include "tihany/analysis.hpp"
#include "tihany/graph.hpp"
#include "tihany/solvers.hpp"

namespace tihany {

/// A clique K is Tihany in G when chi(G \ K) >= chi(G) - |K| + 1.  Since
/// chi(G \ K) >= chi(G) - |K| always holds, K is Tihany exactly when G \ K has
/// no (chi - |K|)-coloring.
struct TihanyCertificate {
    VertexSet clique;
    int chi_before = 0;
    int chi_after = 0;
};

struct TihanyResult {
    bool known = false;   // false when a budget ran out before a verdict
    bool tihany = false;
    TihanyCertificate cert;              // chi fields exact when known
    std::optional<Coloring> refutation;  // (chi-|K|)-coloring of g\k, on g's ids
};

TihanyResult is_tihany(const Graph& g, const VertexSet& k, const Budget& budget);

/// Smallest Tihany clique of size <= kmax, cliques ordered by size then
/// lexicographically.  Unknown when a budget ran out before the first
/// certificate could be confirmed minimal.
struct MinTihany {
    enum class Status { Found, None, Unknown } status = Status::Unknown;
    TihanyCertificate cert;  // valid when Found
};

MinTihany find_min_tihany(const Graph& g, int kmax, const Budget& budget);

/// Dense: C(K) is a clique.  Good: C(K) is an antimatching.
/// S_F(K) = {x : exists kv in K with {x,kv} in f and x complete to K\{kv}},
/// with C(empty) = V.
struct CliqueClassification {
    bool dense = false;
    bool good = false;
    VertexSet s_f;
    CliquePartition partition;
};

CliqueClassification classify_clique(const Graph& g, const VertexSet& k,
                                     const std::vector<Edge>& f = {});

/// Every color class of a (chi-|K|)-coloring of G\K contains a vertex complete
/// to K — vacuous when K is Tihany; a Violation must abort any sweep.
struct LemmaBasic {
    enum class Outcome { Vacuous, Ok, Violation, Unknown } outcome = Outcome::Unknown;
    std::vector<Vertex> witnesses;       // per class, a vertex complete to k
    std::optional<Coloring> coloring;    // the examined coloring, on g's ids
    VertexSet bad_class;                 // the offending class on Violation
};

LemmaBasic check_lemma_basic(const Graph& g, const VertexSet& k, const Budget& budget);

/// D = vertices missed by some maximum matching, computed via mu(G\v) = mu(G);
/// A = N(D)\D; C = the rest.  Throws logic_error if |V|+|A|-c(D) != 2*mu.
struct GEDecomposition {
    VertexSet d, a, c;
    Matching matching;
    int mu = 0;
    int components_of_d = 0;
};

GEDecomposition gallai_edmonds(const Graph& g);

/// Merge exact colorings of G|(a+k) and G|(b+k) across the clique cutset k by
/// aligning the classes of k.  Result has max(chi_A, chi_B) classes.
Coloring merge_cutset_colorings(const Graph& g, const VertexSet& k, const VertexSet& a,
                                const VertexSet& b, const Budget& budget);

/// W-join: disjoint cliques A,B, every outside vertex complete or anticomplete
/// to each, A neither complete nor anticomplete to B.  Reduced when the cross
/// edges form a complete bipartite graph between A1 x B1 with A2 anticomplete
/// to B and B2 anticomplete to A.
struct WJoin {
    VertexSet a, b;
    bool reduced = false;
    std::optional<std::array<VertexSet, 4>> partition;  // A1,A2,B1,B2 when reduced
};

std::optional<WJoin> find_nonreduced_wjoin(const Graph& g);

/// Replace the cross edges of a non-reduced W-join by a reduced pattern with
/// strictly fewer edges that preserves chi exactly (and claw-freeness when the
/// input is claw-free).  Throws runtime_error when no candidate survives — on
/// claw-free input that is a finding, not a recoverable condition.
Graph reduce_wjoin(const Graph& g, const WJoin& w, const Budget& budget);

/// Exhaustive bipartition search: (S,T) with chi(G|S) >= s and chi(G|T) >= t.
/// n <= 16 enforced; sides accepted early via omega >= bound.
struct EltPartition {
    VertexSet s_side, t_side;
    int s = 0, t = 0;
};

std::optional<EltPartition> elt_partition_exists(const Graph& g, int s, int t,
                                                 const Budget& budget);

/// All cliques of size 1..kmax in (size, lex) order.
std::vector<VertexSet> cliques_up_to(const Graph& g, int kmax);

}  // namespace tihany

#endif
