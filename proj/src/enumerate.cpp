#include "gspeyer/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gspeyer {

namespace {

std::vector<std::vector<char>> adjacency(const Graph& g) {
    std::vector<std::vector<char>> a(g.vertex_count, std::vector<char>(g.vertex_count, 0));
    for (auto& [u, v] : g.edges)
        if (u != v) a[u][v] = a[v][u] = 1;
    return a;
}

}  // namespace

std::string invariant_key(const Graph& g) {
    auto adj = adjacency(g);
    int n = g.vertex_count;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u) deg[u] = static_cast<int>(std::count(adj[u].begin(), adj[u].end(), 1));
    std::vector<std::string> profiles;
    for (int u = 0; u < n; ++u) {
        std::vector<int> nd;
        for (int v = 0; v < n; ++v)
            if (adj[u][v]) nd.push_back(deg[v]);
        std::sort(nd.begin(), nd.end());
        std::ostringstream os;
        os << deg[u] << ":";
        for (int d : nd) os << d << ".";
        profiles.push_back(os.str());
    }
    std::sort(profiles.begin(), profiles.end());
    std::ostringstream os;
    os << n << "|" << g.edge_count() << "|";
    for (auto& p : profiles) os << p << ";";
    return os.str();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count;
    auto aa = adjacency(a), ab = adjacency(b);
    std::vector<int> da(n, 0), db(n, 0);
    for (int u = 0; u < n; ++u) {
        da[u] = static_cast<int>(std::count(aa[u].begin(), aa[u].end(), 1));
        db[u] = static_cast<int>(std::count(ab[u].begin(), ab[u].end(), 1));
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // map a's vertices in descending-degree order
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return da[x] > da[y]; });
    std::vector<int> map_to(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int u = order[idx];
        for (int v = 0; v < n; ++v) {
            if (used[v] || db[v] != da[u]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int w = order[j];
                if (aa[u][w] != ab[v][map_to[w]]) ok = false;
            }
            if (!ok) continue;
            used[v] = 1;
            map_to[u] = v;
            if (self(self, idx + 1)) return true;
            used[v] = 0;
            map_to[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

namespace {

// dedupe candidates into classes via invariant buckets + pairwise isomorphism
void insert_class(std::map<std::string, std::vector<Graph>>& buckets, Graph g) {
    auto& bucket = buckets[invariant_key(g)];
    for (const Graph& h : bucket)
        if (are_isomorphic(g, h)) return;
    bucket.push_back(std::move(g));
}

std::vector<Graph> flatten(std::map<std::string, std::vector<Graph>>& buckets) {
    std::vector<Graph> out;
    for (auto& [k, v] : buckets)
        for (auto& g : v) out.push_back(std::move(g));
    return out;
}

int deficiency(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count; ++v) d += std::max(0, 3 - g.degree(v));
    return d;
}

// minimum number of further edges to finish a min-degree-3 graph on v_target
// vertices starting from k current vertices with deficiency d; x edges among
// the f future vertices count twice toward their degree demand of 3f
int min_future_edges(int k, int v_target, int d) {
    int f = v_target - k;
    int best = -1;
    for (int x = 0; x <= f * (f - 1) / 2; ++x) {
        int y = std::max(d, 3 * f - 2 * x);
        if (best == -1 || x + y < best) best = x + y;
    }
    return best;
}

}  // namespace

std::vector<Graph> enumerate_connected_classes(int max_vertices, int max_edges) {
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1, {})};
    out.push_back(level[0]);
    for (int k = 2; k <= max_vertices; ++k) {
        std::map<std::string, std::vector<Graph>> buckets;
        for (const Graph& h : level) {
            int base = h.vertex_count;
            for (std::uint32_t s = 1; s < (1u << base); ++s) {
                int extra = std::popcount(s);
                if (h.edge_count() + extra > max_edges) continue;
                auto edges = h.edges;
                for (int v = 0; v < base; ++v)
                    if (s >> v & 1) edges.push_back({v, base});
                insert_class(buckets, Graph(base + 1, std::move(edges)));
            }
        }
        level = flatten(buckets);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> corpus_graphs(int min_vertices, int max_vertices, int max_edges) {
    std::map<std::string, std::vector<Graph>> result;
    std::vector<Graph> level{Graph(1, {})};
    for (int k = 2; k <= max_vertices; ++k) {
        std::map<std::string, std::vector<Graph>> buckets;
        for (const Graph& h : level) {
            int base = h.vertex_count;
            // deficiency vertices that the new vertex could still serve
            for (std::uint32_t s = 1; s < (1u << base); ++s) {
                int extra = std::popcount(s);
                if (h.edge_count() + extra > max_edges) continue;
                auto edges = h.edges;
                for (int v = 0; v < base; ++v)
                    if (s >> v & 1) edges.push_back({v, base});
                Graph cand(base + 1, std::move(edges));
                int d = deficiency(cand);
                bool viable = false;
                for (int target = k + 1; target <= max_vertices && !viable; ++target)
                    if (cand.edge_count() + min_future_edges(k, target, d) <= max_edges)
                        viable = true;
                bool emit = k >= min_vertices && d == 0 && is_k_connected(cand, 2);
                if (emit) insert_class(result, cand);
                if (viable) insert_class(buckets, std::move(cand));
            }
        }
        level = flatten(buckets);
    }
    std::vector<Graph> out = flatten(result);
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a.vertex_count < b.vertex_count;
    });
    return out;
}

}  // namespace gspeyer
