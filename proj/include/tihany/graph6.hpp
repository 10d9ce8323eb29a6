#ifndef TIHANY_GRAPH6_HPP
#define TIHANY_GRAPH6_HPP

#include <string>

#include "tihany/graph.hpp"

namespace tihany {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Standard graph6 line (no trailing newline).  Padding bits are zero.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line.  A leading ">>graph6<<" header is tolerated.
Graph graph6_decode(const std::string& line);

}  // namespace tihany

#endif
