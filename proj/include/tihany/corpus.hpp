#ifndef TIHANY_CORPUS_HPP
#define TIHANY_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "tihany/graph.hpp"

namespace tihany {

/// Lexicographically minimal upper-triangle encoding over all vertex
/// permutations; equal codes iff isomorphic.  Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// All graphs on exactly n vertices, one per isomorphism class, in canonical
/// code order.  Supported for 1 <= n <= 7.
std::vector<Graph> all_graphs_up_to_iso(int n);

/// The connected ones, same order.
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace tihany

#endif
