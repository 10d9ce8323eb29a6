#include "tihany/graph6.hpp"

#include <vector>

namespace tihany {

namespace {

void append_bits(std::vector<int>& bits, long value, int width) {
    for (int i = width - 1; i >= 0; --i) bits.push_back(int((value >> i) & 1));
}

std::string pack(const std::vector<int>& bits) {
    std::string out;
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (size_t j = i; j < i + 6; ++j) v = (v << 1) | (j < bits.size() ? bits[j] : 0);
        out.push_back(char(63 + v));
    }
    return out;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.n();
    std::string head;
    if (n <= 62) {
        head.push_back(char(63 + n));
    } else if (n <= 258047) {
        std::vector<int> nb;
        append_bits(nb, n, 18);
        head = "~" + pack(nb);
    } else {
        throw Graph6Error("graph6: vertex count too large");
    }
    std::vector<int> bits;
    bits.reserve(size_t(n) * (n - 1) / 2);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    return head + pack(bits);
}

Graph graph6_decode(const std::string& line_in) {
    std::string line = line_in;
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw Graph6Error("graph6: empty line");

    size_t pos = 0;
    auto val = [&](size_t i) {
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: character out of range");
        return c - 63;
    };

    long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') throw Graph6Error("graph6: vertex count too large");
        if (line.size() < 4) throw Graph6Error("graph6: truncated vertex count");
        n = (long(val(1)) << 12) | (long(val(2)) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (long(line.size()) - long(pos) != nbytes) throw Graph6Error("graph6: length mismatch");

    std::vector<Edge> edges;
    long bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int byte = val(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    // padding bits must be zero
    for (long b = nbits; b < nbytes * 6; ++b)
        if ((val(pos + b / 6) >> (5 - b % 6)) & 1) throw Graph6Error("graph6: nonzero padding");
    return Graph::make(int(n), edges);
}

}  // namespace tihany
