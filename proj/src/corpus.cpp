#include "tihany/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tihany {

namespace {

std::uint64_t code_under(const std::vector<std::uint16_t>& rows, const std::vector<int>& perm) {
    int n = (int)rows.size();
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            code <<= 1;
            if (rows[perm[u]] >> perm[v] & 1) code |= 1;
        }
    return code;
}

std::uint64_t canonical_of_rows(const std::vector<std::uint16_t>& rows) {
    int n = (int)rows.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        best = std::min(best, code_under(rows, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int bit = n * (n - 1) / 2;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (code >> --bit & 1) edges.push_back({u, v});
    return Graph::make(n, edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n() > 11) throw std::invalid_argument("canonical_code: n <= 11 required");
    std::vector<std::uint16_t> rows(g.n(), 0);
    for (Edge e : g.edges()) {
        rows[e.first] |= std::uint16_t(1) << e.second;
        rows[e.second] |= std::uint16_t(1) << e.first;
    }
    return canonical_of_rows(rows);
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("all_graphs_up_to_iso: 1 <= n <= 7 required");
    // grow one vertex at a time, deduplicating by canonical code at each level
    std::vector<std::vector<std::uint16_t>> level{{0}};
    for (int k = 2; k <= n; ++k) {
        std::map<std::uint64_t, std::vector<std::uint16_t>> next;
        for (const auto& rows : level)
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<std::uint16_t> ext = rows;
                ext.push_back((std::uint16_t)mask);
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1) ext[v] |= std::uint16_t(1) << (k - 1);
                next.emplace(canonical_of_rows(ext), std::move(ext));
            }
        level.clear();
        std::vector<std::uint64_t> codes;
        for (auto& [code, rows] : next) {
            codes.push_back(code);
            level.push_back(std::move(rows));
        }
        if (k == n) {
            std::vector<Graph> out;
            for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
            return out;
        }
    }
    return {Graph::make(1, {})};
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs_up_to_iso(n))
        if (g.connected()) out.push_back(std::move(g));
    return out;
}

}  // namespace tihany
