#include "tihany/graph.hpp"

namespace tihany {

CliquePartition partition_wrt_clique(const Graph& g, const VertexSet& k) {
    if (!g.is_clique(k)) throw std::invalid_argument("partition_wrt_clique: K is not a clique");
    int n = g.n();
    CliquePartition p{VertexSet(n), VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < n; ++v) {
        if (k.contains(v)) continue;
        int deg_in_k = g.neighbors(v).intersection_size(k);
        if (deg_in_k == k.size())
            p.c.add(v);  // C(empty) = V by the empty-intersection convention
        else if (deg_in_k == 0)
            p.a.add(v);
        else
            p.m.add(v);
    }
    return p;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& k) {
    return partition_wrt_clique(g, k).c | k;
}

}  // namespace tihany
