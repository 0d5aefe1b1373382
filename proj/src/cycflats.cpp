#include "gspeyer/cycflats.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gspeyer {

namespace {

bool lattice_order(EdgeSubset a, EdgeSubset b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
}

// Closure in a graphic matroid: all self-loops plus every edge whose
// endpoints lie in one connected component of the subgraph s.
EdgeSubset graphic_closure(const Graph& g, EdgeSubset s, std::vector<int>& uf) {
    uf.resize(g.vertex_count);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for_each_bit(s, [&](int i) {
        int a = find(g.edges[i].first), b = find(g.edges[i].second);
        if (a != b) uf[b] = a;
    });
    EdgeSubset cl;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        if (u == v || find(u) == find(v)) cl.set(i);
    }
    return cl;
}

std::vector<EdgeSubset> enumerate_graphic(const Matroid& m) {
    const Graph& g = *m.host_graph();
    std::vector<EdgeSubset> gens = chordless_circuits(g);
    std::vector<int> uf;
    EdgeSubset bottom = m.loops();  // = graphic closure of the empty set
    std::unordered_set<std::uint64_t> seen{bottom.bits};
    std::vector<EdgeSubset> queue{bottom}, out{bottom};
    while (!queue.empty()) {
        EdgeSubset a = queue.back();
        queue.pop_back();
        for (const EdgeSubset& c : gens) {
            if (c.subset_of(a)) continue;
            EdgeSubset b = graphic_closure(g, a | c, uf);
            if (seen.insert(b.bits).second) {
                queue.push_back(b);
                out.push_back(b);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<EdgeSubset> chordless_circuits(const Graph& g) {
    int n = g.vertex_count;
    // representative edge per unordered simple pair, digons for parallel classes
    std::vector<std::vector<int>> rep(n, std::vector<int>(n, -1));
    std::vector<EdgeSubset> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        if (u == v) continue;
        if (rep[u][v] == -1) {
            rep[u][v] = rep[v][u] = i;
        } else if (rep[u][v] >= 0) {
            EdgeSubset digon;
            digon.set(rep[u][v]);
            digon.set(i);
            out.push_back(digon);
            rep[u][v] = rep[v][u] = -2 - rep[u][v];  // emitted; keep representative
        }
    }
    auto rep_edge = [&](int u, int v) {
        int r = rep[u][v];
        return r < -1 ? -2 - r : r;
    };
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rep[u][v] != -1) adj[u].push_back(v);

    // grow induced paths; close into a cycle when the tip meets the root
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    auto adjacent = [&](int u, int v) { return rep[u][v] != -1; };
    std::function<void(int)> extend = [&](int v) {
        for (int w : adj[v]) {
            if (w <= path[0] || on_path[w]) continue;
            bool chord = false;
            for (size_t k = 1; k + 1 < path.size(); ++k)
                if (adjacent(w, path[k])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path.size() >= 2 && adjacent(w, path[0])) {
                if (path[1] < w) {  // one orientation per cycle
                    EdgeSubset cyc;
                    for (size_t k = 0; k + 1 < path.size(); ++k)
                        cyc.set(rep_edge(path[k], path[k + 1]));
                    cyc.set(rep_edge(path.back(), w));
                    cyc.set(rep_edge(w, path[0]));
                    out.push_back(cyc);
                }
                continue;  // any extension past w would leave the chord w-root
            }
            path.push_back(w);
            on_path[w] = 1;
            extend(w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = 1;
        extend(s);
        on_path[s] = 0;
    }
    return out;
}

std::vector<EdgeSubset> cyclic_flats_bruteforce(const Matroid& m) {
    int n = m.size();
    if (n > 22) throw std::invalid_argument("cyclic_flats_bruteforce: ground set too large");
    std::vector<EdgeSubset> out;
    for (std::uint64_t bits = 0;; ++bits) {
        EdgeSubset a(bits);
        if (m.closure(a) == a && m.cyclic_core(a) == a) out.push_back(a);
        if (bits == EdgeSubset::full(n).bits) break;
    }
    std::sort(out.begin(), out.end(), lattice_order);
    return out;
}

int CyclicFlatLattice::index_of(EdgeSubset s) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), s, lattice_order);
    if (it == elements.end() || !(*it == s)) return -1;
    return static_cast<int>(it - elements.begin());
}

CyclicFlatLattice enumerate_cyclic_flats(const Matroid& m) {
    CyclicFlatLattice lat;
    std::vector<EdgeSubset> elems;
    if (m.kind() == Matroid::Kind::Graphic)
        elems = enumerate_graphic(m);
    else
        elems = cyclic_flats_bruteforce(m);
    std::sort(elems.begin(), elems.end(), lattice_order);
    lat.elements = std::move(elems);
    int n = lat.size();
    lat.rank.resize(n);
    lat.corank.resize(n);
    for (int i = 0; i < n; ++i) {
        lat.rank[i] = m.rank(lat.elements[i]);
        lat.corank[i] = lat.elements[i].count() - lat.rank[i];
    }
    lat.bottom = 0;  // smallest element is the loop set
    lat.top = n - 1;

    // strict containments; elements sorted by size, so only look left
    lat.below.assign(n, {});
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i)
            if (lat.elements[i].count() < lat.elements[j].count() &&
                lat.elements[i].subset_of(lat.elements[j]))
                lat.below[j].push_back(i);
    }

    // covers: minimal strict supersets. Scanning below[j] by descending size,
    // i is covered by j iff i lies under no already-accepted covered element.
    lat.covers_up.assign(n, {});
    std::vector<std::int32_t> covered;
    for (int j = 0; j < n; ++j) {
        covered.clear();
        for (auto it = lat.below[j].rbegin(); it != lat.below[j].rend(); ++it) {
            bool is_cover = true;
            for (std::int32_t k : covered)
                if (lat.elements[*it].subset_of(lat.elements[k])) {
                    is_cover = false;
                    break;
                }
            if (is_cover) covered.push_back(*it);
        }
        for (std::int32_t i : covered) lat.covers_up[i].push_back(j);
    }
    for (auto& c : lat.covers_up) std::sort(c.begin(), c.end());
    return lat;
}

MoebiusTable::MoebiusTable(const CyclicFlatLattice& lattice) : lat_(&lattice) {
    int n = lattice.size();
    rows_.resize(n);
    for (int b = 0; b < n; ++b) {
        const auto& down = lattice.below[b];
        auto& row = rows_[b];
        row.assign(down.size(), 0);
        // mu(a,b) = -sum_{a < c <= b} mu(c,b); scan descending (larger c first)
        for (int ai = static_cast<int>(down.size()) - 1; ai >= 0; --ai) {
            EdgeSubset a = lattice.elements[down[ai]];
            std::int64_t s = 1;  // c = b contributes mu(b,b) = 1
            for (int ci = ai + 1; ci < static_cast<int>(down.size()); ++ci)
                if (a.subset_of(lattice.elements[down[ci]])) s += row[ci];
            row[ai] = -s;
        }
    }
}

std::int64_t MoebiusTable::mu(int a, int b) const {
    if (a == b) return 1;
    const auto& down = lat_->below[b];
    auto it = std::lower_bound(down.begin(), down.end(), a);
    if (it == down.end() || *it != a) throw std::invalid_argument("mu: incomparable pair");
    return rows_[b][it - down.begin()];
}

std::int64_t MoebiusTable::mu_bottom_top() const {
    if (lat_->bottom == lat_->top) return 1;
    return mu(lat_->bottom, lat_->top);
}

MoebiusTable moebius(const CyclicFlatLattice& lattice) { return MoebiusTable(lattice); }

std::int64_t euler_characteristic_oracle(const CyclicFlatLattice& lattice,
                                         std::uint64_t chain_guard) {
    int n = lattice.size();
    if (lattice.bottom == lattice.top) return 1;  // empty interval: mu = 1
    // chains of the proper part; below lists are index-ascending
    std::vector<std::uint64_t> count(n, 0);
    std::vector<std::int64_t> signed_sum(n, 0);
    std::uint64_t total = 0;
    for (int x = 0; x < n; ++x) {
        if (x == lattice.bottom || x == lattice.top) continue;
        std::uint64_t c = 1;
        std::int64_t s = 1;
        for (std::int32_t y : lattice.below[x]) {
            if (y == lattice.bottom) continue;
            c += count[y];
            s -= signed_sum[y];
        }
        count[x] = c;
        signed_sum[x] = s;
        total += c;
        if (total > chain_guard)
            throw std::runtime_error("euler_characteristic_oracle: chain count exceeds guard");
    }
    std::int64_t chi = 0;
    for (int x = 0; x < n; ++x)
        if (x != lattice.bottom && x != lattice.top) chi += signed_sum[x];
    return chi - 1;  // reduced: subtract the empty chain
}

LatticeStats lattice_stats(const CyclicFlatLattice& lattice) {
    LatticeStats st;
    st.element_count = lattice.size();
    for (const auto& c : lattice.covers_up) st.hasse_edge_count += c.size();
    for (const auto& b : lattice.below) st.comparable_pair_count += b.size();
    return st;
}

std::string dot_dump(const CyclicFlatLattice& lattice) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n";
    for (int i = 0; i < lattice.size(); ++i) {
        os << "  n" << i << " [label=\"{";
        bool first = true;
        for_each_bit(lattice.elements[i], [&](int e) {
            if (!first) os << ",";
            os << e;
            first = false;
        });
        os << "} r" << lattice.rank[i] << "\"];\n";
    }
    for (int i = 0; i < lattice.size(); ++i)
        for (std::int32_t j : lattice.covers_up[i]) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gspeyer
