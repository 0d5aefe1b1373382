#include <algorithm>
#include <set>
#include <vector>

#include "gspeyer/graph.hpp"

namespace gspeyer {

namespace {

// Demoucron-Malgrange-Pertuiset planarity for a biconnected simple graph,
// given as an adjacency matrix on n vertices. Faces of the partial embedding
// are simple cycles (the embedded subgraph stays biconnected). Each round
// computes the fragments relative to the embedded subgraph, their contact
// vertices and admissible faces; a fragment with a unique admissible face is
// embedded first, otherwise any fragment is safe.
bool dmp_biconnected(int n, std::vector<std::vector<char>> adj) {
    int m = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m += adj[i][j];
    if (n < 5 || m < 9) return true;  // K5 needs 5 vertices, K33 needs 9 edges
    if (m > 3 * n - 6) return false;

    std::vector<std::vector<char>> embedded(n, std::vector<char>(n, 0));
    std::vector<char> in_h(n, 0);

    // start with any cycle: walk until a vertex repeats
    std::vector<int> walk{0};
    std::vector<int> prev(n, -1);
    {
        std::vector<char> seen(n, 0);
        int v = 0, p = -1;
        seen[0] = 1;
        int cyc_start = -1;
        while (cyc_start == -1) {
            int next = -1;
            for (int w = 0; w < n && next == -1; ++w)
                if (adj[v][w] && w != p) next = w;
            // biconnected with min degree >= 2: next always exists
            if (seen[next]) {
                cyc_start = next;
            } else {
                seen[next] = 1;
                walk.push_back(next);
            }
            p = v;
            v = next;
            if (cyc_start == -1) continue;
        }
        // cycle = walk from cyc_start to end
        auto it = std::find(walk.begin(), walk.end(), cyc_start);
        walk.erase(walk.begin(), it);
    }
    std::vector<std::vector<int>> faces{walk, {walk.rbegin(), walk.rend()}};
    for (size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i], b = walk[(i + 1) % walk.size()];
        embedded[a][b] = embedded[b][a] = 1;
        in_h[a] = 1;
        in_h[b] = 1;
    }

    while (true) {
        // fragments: unembedded edges, grouped by connectivity through
        // unembedded vertices
        std::vector<std::pair<int, int>> pending;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i][j] && !embedded[i][j]) pending.push_back({i, j});
        if (pending.empty()) return true;

        std::vector<int> comp(n, -1);  // components of unembedded vertices
        int ncomp = 0;
        for (int v = 0; v < n; ++v) {
            if (in_h[v] || comp[v] != -1) continue;
            std::vector<int> stack{v};
            comp[v] = ncomp;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w = 0; w < n; ++w)
                    if (adj[x][w] && !in_h[w] && comp[w] == -1) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
            }
            ++ncomp;
        }
        // fragment key: component id, or vertex pair for lone chords
        struct Fragment {
            std::set<int> contacts;
            std::vector<std::pair<int, int>> edges;
        };
        std::vector<Fragment> frags(ncomp);
        std::vector<Fragment> chords;
        for (auto [i, j] : pending) {
            if (in_h[i] && in_h[j]) {
                Fragment f;
                f.contacts = {i, j};
                f.edges = {{i, j}};
                chords.push_back(std::move(f));
            } else {
                int c = in_h[i] ? comp[j] : comp[i];
                frags[c].edges.push_back({i, j});
                if (in_h[i]) frags[c].contacts.insert(i);
                if (in_h[j]) frags[c].contacts.insert(j);
            }
        }
        std::vector<Fragment> all;
        for (auto& f : frags)
            if (!f.edges.empty()) all.push_back(std::move(f));
        for (auto& f : chords) all.push_back(std::move(f));

        // admissible faces per fragment
        int best = -1, best_count = -1;
        std::vector<int> best_faces;
        for (size_t fi = 0; fi < all.size(); ++fi) {
            std::vector<int> adm;
            for (size_t k = 0; k < faces.size(); ++k) {
                std::set<int> fv(faces[k].begin(), faces[k].end());
                bool ok = true;
                for (int c : all[fi].contacts)
                    if (!fv.count(c)) {
                        ok = false;
                        break;
                    }
                if (ok) adm.push_back(static_cast<int>(k));
            }
            if (adm.empty()) return false;
            if (best == -1 || static_cast<int>(adm.size()) < best_count) {
                best = static_cast<int>(fi);
                best_count = static_cast<int>(adm.size());
                best_faces = adm;
            }
        }

        // alpha-path between two contacts of the chosen fragment
        Fragment& f = all[best];
        std::vector<int> path;
        {
            auto cit = f.contacts.begin();
            int s = *cit;
            if (f.edges.size() == 1 && f.contacts.size() == 2) {
                path = {s, *std::next(cit)};
            } else {
                // BFS inside the fragment from s to any other contact
                std::vector<int> par(n, -2);
                std::vector<int> queue{s};
                par[s] = -1;
                int goal = -1;
                for (size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
                    int x = queue[qi];
                    for (int w = 0; w < n; ++w) {
                        if (!adj[x][w] || embedded[x][w] || par[w] != -2) continue;
                        bool frag_edge = false;
                        for (auto& [a, b] : f.edges)
                            if ((a == x && b == w) || (a == w && b == x)) {
                                frag_edge = true;
                                break;
                            }
                        if (!frag_edge) continue;
                        if (in_h[w] && w != s) {
                            par[w] = x;
                            goal = w;
                            break;
                        }
                        if (!in_h[w]) {
                            par[w] = x;
                            queue.push_back(w);
                        }
                    }
                }
                for (int x = goal; x != -1; x = par[x]) path.push_back(x);
            }
        }

        // embed the path into the admissible face, splitting it in two
        std::vector<int> face = faces[best_faces[0]];
        faces.erase(faces.begin() + best_faces[0]);
        int u = path.front(), w = path.back();
        int pu = -1, pw = -1;
        for (size_t k = 0; k < face.size(); ++k) {
            if (face[k] == u) pu = static_cast<int>(k);
            if (face[k] == w) pw = static_cast<int>(k);
        }
        auto arc = [&](int from, int to) {
            std::vector<int> r;
            for (int k = from; k != to; k = (k + 1) % static_cast<int>(face.size()))
                r.push_back(face[k]);
            r.push_back(face[to]);
            return r;
        };
        std::vector<int> arc1 = arc(pu, pw), arc2 = arc(pw, pu);
        std::vector<int> f1 = arc1, f2 = arc2;
        for (size_t k = path.size() - 2; k >= 1; --k) f1.push_back(path[k]);
        for (size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);
        faces.push_back(std::move(f1));
        faces.push_back(std::move(f2));
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            embedded[path[k]][path[k + 1]] = embedded[path[k + 1]][path[k]] = 1;
            in_h[path[k]] = 1;
            in_h[path[k + 1]] = 1;
        }
    }
}

}  // namespace

bool is_planar(const Graph& g) {
    Graph s = simplify(g);
    // test each biconnected block separately
    for (const EdgeSubset& blk : blocks(s)) {
        std::vector<int> verts;
        std::vector<char> mark(s.vertex_count, 0);
        for_each_bit(blk, [&](int i) {
            auto [u, v] = s.edges[i];
            if (!mark[u]) mark[u] = 1, verts.push_back(u);
            if (!mark[v]) mark[v] = 1, verts.push_back(v);
        });
        int k = static_cast<int>(verts.size());
        if (k < 5) continue;
        std::vector<int> label(s.vertex_count, -1);
        for (int i = 0; i < k; ++i) label[verts[i]] = i;
        std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
        for_each_bit(blk, [&](int i) {
            auto [u, v] = s.edges[i];
            adj[label[u]][label[v]] = adj[label[v]][label[u]] = 1;
        });
        if (!dmp_biconnected(k, std::move(adj))) return false;
    }
    return true;
}

}  // namespace gspeyer
