#include <stdexcept>
#include <string>

#include "gspeyer/graph.hpp"

namespace gspeyer {

// nauty graph6, short form: byte n+63, then the upper triangle in column-major
// order (columns j = 1..n-1, rows i = 0..j-1), 6 bits per byte, high bit first,
// zero-padded, all bytes biased by 63.

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (!s.empty() && s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty line");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range 63..126");
    if (s[0] == '~') throw std::invalid_argument("graph6: long form (>= 63 vertices) unsupported");
    int n = s[0] - 63;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: wrong length for " + std::to_string(n) +
                                    " vertices (trailing garbage or truncation)");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    }
    // padding bits must be zero
    for (int b = nbits; b < 6 * nbytes; ++b) {
        int byte = s[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count;
    if (n > 62) throw std::invalid_argument("graph6: more than 62 vertices");
    if (!g.is_simple()) throw std::invalid_argument("graph6: graph must be simple");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    std::string out(1, static_cast<char>(n + 63));
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::string data(nbytes, 0);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (adj[i][j]) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : data) c = static_cast<char>(c + 63);
    return out + data;
}

}  // namespace gspeyer
