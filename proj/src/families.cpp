#include <algorithm>
#include <stdexcept>

#include "gspeyer/graph.hpp"

namespace gspeyer {

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("multipartite: part sizes >= 1");
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
        n += parts[p];
    }
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (part_of[i] != part_of[j]) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph wheel(int r) {
    if (r < 3) throw std::invalid_argument("wheel: r >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) edges.push_back({i, (i + 1) % r});
    for (int i = 0; i < r; ++i) edges.push_back({i, r});  // hub is vertex r
    return Graph(r + 1, std::move(edges));
}

Graph circulant(int n, const std::vector<int>& steps) {
    if (n < 3) throw std::invalid_argument("circulant: n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int a : steps) {
        if (a < 1 || 2 * a > n) throw std::invalid_argument("circulant: steps in 1..n/2");
        int count = (2 * a == n) ? n / 2 : n;  // halved step yields a perfect matching
        for (int i = 0; i < count; ++i) edges.push_back({i, (i + a) % n});
    }
    return Graph(n, std::move(edges));
}

Graph prism(int n) {
    if (n < 3) throw std::invalid_argument("prism: n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
    return Graph(2 * n, std::move(edges));
}

Graph moebius_ladder(int n) {
    if (n < 2) throw std::invalid_argument("moebius: n >= 2");
    return circulant(2 * n, {1, n});
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges;
    for (auto [u, v] : b.edges) edges.push_back({a.vertex_count + u, a.vertex_count + v});
    for (int u = 0; u < a.vertex_count; ++u)
        for (int v = 0; v < b.vertex_count; ++v) edges.push_back({u, a.vertex_count + v});
    return Graph(a.vertex_count + b.vertex_count, std::move(edges));
}

Graph family(const std::string& name, const std::string& param) {
    auto as_int = [](const std::string& s) {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer parameter: " + s);
        return v;
    };
    if (name == "complete") return complete_graph(as_int(param));
    if (name == "wheel") return wheel(as_int(param));
    if (name == "prism") return prism(as_int(param));
    if (name == "moebius") return moebius_ladder(as_int(param));
    if (name == "zigzag") return circulant(as_int(param), {1, 2});
    if (name == "path") return path_graph(as_int(param));
    if (name == "k3n") return complete_multipartite({3, as_int(param)});
    if (name == "k111n") return complete_multipartite({1, 1, 1, as_int(param)});
    if (name == "multipartite") {
        std::vector<int> parts;
        size_t pos = 0;
        while (pos < param.size()) {
            auto comma = param.find(',', pos);
            if (comma == std::string::npos) comma = param.size();
            parts.push_back(as_int(param.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return complete_multipartite(parts);
    }
    if (name == "circulant") {
        auto colon = param.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("circulant parameter syntax: n:a,b");
        int n = as_int(param.substr(0, colon));
        std::vector<int> steps;
        std::string rest = param.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            steps.push_back(as_int(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (steps.empty()) throw std::invalid_argument("circulant: no steps given");
        return circulant(n, steps);
    }
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace gspeyer
