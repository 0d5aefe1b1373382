#include "gspeyer/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gspeyer {

Graph::Graph(int n, std::vector<std::pair<int, int>> e) : vertex_count(n), edges(std::move(e)) {
    check_edge_capacity(edge_count());
    for (auto& [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;  // self-loop counts twice
    }
    return d;
}

bool Graph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) return false;
    }
    return true;
}

bool Graph::has_self_loop() const {
    for (auto& [u, v] : edges)
        if (u == v) return true;
    return false;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

int component_count(const Graph& g, EdgeSubset s) {
    UnionFind uf(g.vertex_count);
    int comps = g.vertex_count;
    for_each_bit(s, [&](int i) {
        if (uf.unite(g.edges[i].first, g.edges[i].second)) --comps;
    });
    return comps;
}

int component_count(const Graph& g) { return component_count(g, g.all_edges()); }

int graphic_rank(const Graph& g, EdgeSubset s) {
    UnionFind uf(g.vertex_count);
    int rank = 0;
    for_each_bit(s, [&](int i) {
        if (uf.unite(g.edges[i].first, g.edges[i].second)) ++rank;
    });
    return rank;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count == 0) return true;
    return component_count(g) == 1;
}

// Biconnected components via DFS on edge indices; parallel edges are distinct
// edges, so a parallel pair forms a cycle and lands in one block.
std::vector<EdgeSubset> blocks(const Graph& g) {
    int n = g.vertex_count, m = g.edge_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge index)
    std::vector<EdgeSubset> out;
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges[i];
        if (u == v) {
            out.push_back(EdgeSubset::single(i));  // self-loop: own block
            continue;
        }
        adj[u].push_back({v, i});
        adj[v].push_back({u, i});
    }
    std::vector<int> depth(n, -1), low(n, 0);
    std::vector<int> edge_stack;

    // Iterative DFS to keep deep graphs safe.
    struct Frame {
        int v;
        int parent_edge;
        size_t it = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (depth[root] != -1) continue;
        std::vector<Frame> stack{{root, -1}};
        depth[root] = 0;
        low[root] = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.it < adj[f.v].size()) {
                auto [w, ei] = adj[f.v][f.it++];
                if (ei == f.parent_edge) continue;
                if (depth[w] == -1) {
                    edge_stack.push_back(ei);
                    depth[w] = depth[f.v] + 1;
                    low[w] = depth[w];
                    stack.push_back({w, ei});
                } else if (depth[w] < depth[f.v]) {
                    edge_stack.push_back(ei);
                    low[f.v] = std::min(low[f.v], depth[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= depth[u]) {
                        // u is an articulation point (or root): pop one block
                        EdgeSubset blk;
                        while (true) {
                            int ei = edge_stack.back();
                            edge_stack.pop_back();
                            blk.set(ei);
                            if (ei == pe) break;
                        }
                        out.push_back(blk);
                    }
                }
            }
        }
    }
    return out;
}

int block_count(const Graph& g, EdgeSubset s) {
    int n = g.vertex_count;
    thread_local std::vector<int> head, nxt, to, arc_eid, depth, low, stack_v, stack_pe,
        stack_it;
    head.assign(n, -1);
    int arcs = 0;
    int count = 0;
    nxt.resize(2 * g.edge_count());
    to.resize(2 * g.edge_count());
    arc_eid.resize(2 * g.edge_count());
    for_each_bit(s, [&](int i) {
        auto [u, v] = g.edges[i];
        if (u == v) {
            ++count;  // self-loop block
            return;
        }
        to[arcs] = v;
        arc_eid[arcs] = i;
        nxt[arcs] = head[u];
        head[u] = arcs++;
        to[arcs] = u;
        arc_eid[arcs] = i;
        nxt[arcs] = head[v];
        head[v] = arcs++;
    });
    depth.assign(n, -1);
    low.assign(n, 0);
    stack_v.clear();
    stack_pe.clear();
    stack_it.clear();
    for (int root = 0; root < n; ++root) {
        if (depth[root] != -1 || head[root] == -1) continue;
        depth[root] = 0;
        low[root] = 0;
        stack_v.push_back(root);
        stack_pe.push_back(-1);
        stack_it.push_back(head[root]);
        while (!stack_v.empty()) {
            int v = stack_v.back();
            int& it = stack_it.back();
            if (it != -1) {
                int w = to[it], ei = arc_eid[it];
                it = nxt[it];
                if (ei == stack_pe.back()) continue;
                if (depth[w] == -1) {
                    depth[w] = depth[v] + 1;
                    low[w] = depth[w];
                    stack_v.push_back(w);
                    stack_pe.push_back(ei);
                    stack_it.push_back(head[w]);
                } else if (depth[w] < depth[v]) {
                    low[v] = std::min(low[v], depth[w]);
                }
            } else {
                stack_v.pop_back();
                stack_pe.pop_back();
                stack_it.pop_back();
                if (!stack_v.empty()) {
                    int u = stack_v.back();
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= depth[u]) ++count;  // block closes at u
                }
            }
        }
    }
    return count;
}

std::vector<VertexCut> vertex_cuts(const Graph& g, int k) {
    int n = g.vertex_count;
    std::vector<VertexCut> cuts;
    if (k < 1 || k >= n) return cuts;
    std::vector<char> removed(n, 0);
    // enumerate all C(n,k) subsets
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::fill(removed.begin(), removed.end(), 0);
        for (int i : idx) removed[i] = 1;
        UnionFind uf(n);
        int comps = n - k;
        for (auto& [u, v] : g.edges)
            if (u != v && !removed[u] && !removed[v] && uf.unite(u, v)) --comps;
        if (comps >= 2) {
            VertexCut c;
            c.vertices = idx;
            c.component_count = comps;
            cuts.push_back(std::move(c));
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return cuts;
}

bool is_k_connected(const Graph& g, int k) {
    if (g.vertex_count <= k) return false;
    if (!is_connected(g)) return false;
    for (int j = 1; j < k; ++j)
        if (!vertex_cuts(g, j).empty()) return false;
    return true;
}

std::vector<EdgeCut> edge_cuts(const Graph& g, int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("edge_cuts: k must be 3 or 4");
    if (!is_connected(g)) throw std::invalid_argument("edge_cuts: graph must be connected");
    int m = g.edge_count(), n = g.vertex_count;
    std::vector<EdgeCut> cuts;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (m < k) return cuts;
    while (true) {
        EdgeSubset cut;
        for (int i : idx) cut.set(i);
        UnionFind uf(n);
        int comps = n;
        for (int i = 0; i < m; ++i)
            if (!cut.test(i) && uf.unite(g.edges[i].first, g.edges[i].second)) --comps;
        if (comps == 2) {
            // minimal iff every cut edge crosses the two sides
            bool minimal = true;
            for (int i : idx) {
                auto [u, v] = g.edges[i];
                if (u == v || uf.find(u) == uf.find(v)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                EdgeCut c;
                c.edges = cut;
                int ra = uf.find(g.edges[idx[0]].first);
                for (int v = 0; v < n; ++v)
                    (uf.find(v) == ra ? c.side_a : c.side_b).push_back(v);
                c.trivial = (c.side_a.size() == 1 || c.side_b.size() == 1);
                cuts.push_back(std::move(c));
            }
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return cuts;
}

Graph contract(const Graph& g, EdgeSubset s) {
    UnionFind uf(g.vertex_count);
    for_each_bit(s, [&](int i) { uf.unite(g.edges[i].first, g.edges[i].second); });
    // compact labels by order of first appearance of each class representative
    std::vector<int> label(g.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int r = uf.find(v);
        if (label[r] == -1) label[r] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (s.test(i)) continue;
        auto [u, v] = g.edges[i];
        edges.push_back({label[uf.find(u)], label[uf.find(v)]});
    }
    return Graph(next, std::move(edges));
}

Graph delete_edges(const Graph& g, EdgeSubset s) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!s.test(i)) edges.push_back(g.edges[i]);
    return Graph(g.vertex_count, std::move(edges));
}

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> gone(g.vertex_count, 0);
    for (int v : vs) gone.at(v) = 1;
    std::vector<int> label(g.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!gone[v]) label[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto& [u, v] : g.edges)
        if (!gone[u] && !gone[v]) edges.push_back({label[u], label[v]});
    return Graph(next, std::move(edges));
}

Graph simplify(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.insert({u, v}).second) edges.push_back({u, v});
    }
    return Graph(g.vertex_count, std::move(edges));
}

}  // namespace gspeyer
