#include "gspeyer/invariants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gspeyer/speyer.hpp"

namespace gspeyer {

namespace {
const Int kZero = 0;
}

const Int& TuttePoly::coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(t.size())) return kZero;
    if (j < 0 || j >= static_cast<int>(t[i].size())) return kZero;
    return t[i][j];
}

Int TuttePoly::evaluate(const Int& x, const Int& y) const {
    Int r = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        Int xp = 1;
        for (size_t k = 0; k < i; ++k) xp *= x;
        for (size_t j = 0; j < t[i].size(); ++j) {
            if (t[i][j] == 0) continue;
            Int yp = 1;
            for (size_t k = 0; k < j; ++k) yp *= y;
            r += t[i][j] * xp * yp;
        }
    }
    return r;
}

namespace {

void tutte_trim(TuttePoly& tp) {
    for (auto& row : tp.t)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!tp.t.empty() && tp.t.back().empty()) tp.t.pop_back();
}

void tutte_add(TuttePoly& tp, int i, int j, const Int& v) {
    if (i >= static_cast<int>(tp.t.size())) tp.t.resize(i + 1);
    if (j >= static_cast<int>(tp.t[i].size())) tp.t[i].resize(j + 1, 0);
    tp.t[i][j] += v;
}

}  // namespace

TuttePoly tutte_subsets(const Matroid& m) {
    int n = m.size();
    if (n > 24) throw std::invalid_argument("tutte_subsets: more than 24 elements");
    int r = m.rank();
    // count subsets by (rank, corank), then expand the (x-1)/(y-1) powers
    std::vector<std::vector<long long>> cnt(r + 1);
    for (auto& row : cnt) row.assign(n - r + 1, 0);
    std::uint64_t full = EdgeSubset::full(n).bits;
    for (std::uint64_t bits = 0;; ++bits) {
        EdgeSubset a(bits);
        int ra = m.rank(a);
        ++cnt[ra][a.count() - ra];
        if (bits == full) break;
    }
    TuttePoly tp;
    for (int ra = 0; ra <= r; ++ra) {
        for (int la = 0; la <= n - r; ++la) {
            if (cnt[ra][la] == 0) continue;
            Int c = cnt[ra][la];
            for (int i = 0; i <= r - ra; ++i)
                for (int j = 0; j <= la; ++j) {
                    Int term = c * binomial(r - ra, i) * binomial(la, j);
                    if (((r - ra - i) + (la - j)) % 2) term = -term;
                    tutte_add(tp, i, j, term);
                }
        }
    }
    tutte_trim(tp);
    return tp;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// sorted edge multiset with vertices relabelled by first appearance
EdgeList reduced_key(const Graph& g) {
    EdgeList es;
    es.reserve(g.edges.size());
    for (auto [u, v] : g.edges) es.push_back({std::min(u, v), std::max(u, v)});
    std::sort(es.begin(), es.end());
    std::vector<int> label(g.vertex_count, -1);
    int next = 0;
    for (auto& [u, v] : es) {
        if (label[u] == -1) label[u] = next++;
        if (label[v] == -1) label[v] = next++;
        int a = label[u], b = label[v];
        u = std::min(a, b);
        v = std::max(a, b);
    }
    std::sort(es.begin(), es.end());
    return es;
}

EdgeSubset graph_bridges(const Graph& g) {
    EdgeSubset bridges;
    int base = component_count(g, g.all_edges());
    for (int i = 0; i < g.edge_count(); ++i) {
        EdgeSubset rest = g.all_edges();
        rest.reset(i);
        if (component_count(g, rest) > base) bridges.set(i);
    }
    return bridges;
}

TuttePoly tutte_dc(const EdgeList& key, std::map<EdgeList, TuttePoly>& memo) {
    if (key.empty()) {
        TuttePoly one;
        tutte_add(one, 0, 0, 1);
        return one;
    }
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int n = 0;
    for (auto& [u, v] : key) n = std::max({n, u + 1, v + 1});

    int loops = 0;
    EdgeList core;
    for (auto& [u, v] : key)
        if (u == v)
            ++loops;
        else
            core.push_back({u, v});
    Graph gc(n, core);
    EdgeSubset bridges = graph_bridges(gc);
    int nbridges = bridges.count();

    TuttePoly result;
    if (core.empty() || nbridges == static_cast<int>(core.size())) {
        result = TuttePoly{};
        tutte_add(result, nbridges, loops, 1);
    } else if (loops > 0 || nbridges > 0) {
        EdgeList inner;
        for (int i = 0; i < gc.edge_count(); ++i)
            if (!bridges.test(i)) inner.push_back(gc.edges[i]);
        Graph gi(n, inner);
        TuttePoly sub = tutte_dc(reduced_key(gi), memo);
        // shift by x^{bridges} y^{loops}
        result = TuttePoly{};
        for (size_t i = 0; i < sub.t.size(); ++i)
            for (size_t j = 0; j < sub.t[i].size(); ++j)
                if (sub.t[i][j] != 0)
                    tutte_add(result, static_cast<int>(i) + nbridges,
                              static_cast<int>(j) + loops, sub.t[i][j]);
    } else {
        // pick the non-loop non-bridge edge with the largest endpoint degrees
        int best = -1;
        long long best_score = -1;
        for (int i = 0; i < gc.edge_count(); ++i) {
            auto [u, v] = gc.edges[i];
            long long score = gc.degree(u) + gc.degree(v);
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        Graph del = delete_edges(gc, EdgeSubset::single(best));
        Graph con = contract(gc, EdgeSubset::single(best));
        TuttePoly a = tutte_dc(reduced_key(del), memo);
        TuttePoly b = tutte_dc(reduced_key(con), memo);
        result = a;
        for (size_t i = 0; i < b.t.size(); ++i)
            for (size_t j = 0; j < b.t[i].size(); ++j)
                if (b.t[i][j] != 0)
                    tutte_add(result, static_cast<int>(i), static_cast<int>(j), b.t[i][j]);
    }
    tutte_trim(result);
    memo.emplace(key, result);
    return result;
}

}  // namespace

TuttePoly tutte_graph(const Graph& g) {
    std::map<EdgeList, TuttePoly> memo;
    return tutte_dc(reduced_key(g), memo);
}

TuttePoly tutte(const Matroid& m) {
    if (m.kind() == Matroid::Kind::Graphic) return tutte_graph(*m.host_graph());
    return tutte_subsets(m);
}

Int beta_subsets(const Matroid& m) {
    int n = m.size();
    if (n > 24) throw std::invalid_argument("beta_subsets: more than 24 elements");
    long long sum = 0;
    std::uint64_t full = EdgeSubset::full(n).bits;
    for (std::uint64_t bits = 0;; ++bits) {
        EdgeSubset a(bits);
        int ra = m.rank(a);
        sum += (a.count() % 2) ? -ra : ra;
        if (bits == full) break;
    }
    Int beta = sum;
    if (m.rank() % 2) beta = -beta;
    return beta;
}

Int beta_tutte(const Matroid& m) { return tutte(m).beta(); }

namespace {

// f[W] = signed count of connected spanning subgraphs of G[W]:
// sum over edge sets E' inside W with (W, E') connected of (-1)^{|E'|}.
// Solved from h[W] = [G[W] has no edges] by anchored subset convolution.
std::vector<long long> connected_signed_counts(const Graph& g) {
    int n = g.vertex_count;
    if (n > 16) throw std::invalid_argument("nuclei: more than 16 vertices");
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<char> h(size, 0);
    for (std::uint64_t w = 0; w < size; ++w) {
        bool empty = true;
        for (auto& [u, v] : g.edges)
            if ((w >> u & 1) && (w >> v & 1)) {
                empty = false;
                break;
            }
        h[w] = empty;
    }
    std::vector<long long> f(size, 0);
    for (std::uint64_t w = 1; w < size; ++w) {
        int anchor = std::countr_zero(w);
        long long s = h[w];
        // proper submasks S of W containing the anchor
        std::uint64_t rest = w & ~(std::uint64_t{1} << anchor);
        for (std::uint64_t sub = rest; sub > 0; sub = (sub - 1) & rest) {
            std::uint64_t S = (w & ~sub);  // anchor in S, sub = W \ S nonempty
            s -= f[S] * h[sub];
        }
        f[w] = s;
    }
    return f;
}

bool is_vertex_cover(const Graph& g, std::uint64_t w) {
    for (auto& [u, v] : g.edges)
        if (!(w >> u & 1) && !(w >> v & 1)) return false;
    return true;
}

}  // namespace

Int beta_nuclei(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("beta_nuclei: graph has no edges");
    auto f = connected_signed_counts(g);
    long long total = 0;
    for (std::uint64_t w = 1; w < f.size(); ++w)
        if (f[w] != 0 && is_vertex_cover(g, w)) total += f[w];
    Int beta = total;
    if (graphic_rank(g, g.all_edges()) % 2 == 0) beta = -beta;
    return beta;  // beta = -(-1)^rk sum
}

std::vector<Int> elser_vertex_sums(const Graph& g) {
    auto f = connected_signed_counts(g);
    std::vector<Int> sums(g.vertex_count, 0);
    for (std::uint64_t w = 1; w < f.size(); ++w) {
        if (f[w] == 0 || !is_vertex_cover(g, w)) continue;
        for (int v = 0; v < g.vertex_count; ++v)
            if (w >> v & 1) sums[v] += f[w];
    }
    return sums;
}

Poly flow_poly(const Graph& g) {
    TuttePoly tp = tutte_graph(g);
    int corank = g.edge_count() - graphic_rank(g, g.all_edges());
    // F(q) = (-1)^corank sum_j t_{0,j} (1-q)^j
    Poly one_minus_q(std::vector<Int>{1, -1});
    Poly acc;
    Poly pw = Poly::constant(1);
    int jmax = tp.t.empty() ? -1 : static_cast<int>(tp.t[0].size()) - 1;
    for (int j = 0; j <= jmax; ++j) {
        acc.add_scaled(pw, tp.coeff(0, j));
        pw = pw * one_minus_q;
    }
    if (corank % 2) acc = -acc;
    return acc;
}

namespace {

// beta for every edge subset at once: beta(A) = (-1)^{rk A} sum_{B<=A} (-1)^{|B|} rk(B),
// via a subset-sum (zeta) transform.
std::vector<long long> beta_table(const Matroid& m) {
    int n = m.size();
    if (n > 20) throw std::invalid_argument("beta_table: more than 20 elements");
    std::uint64_t size = std::uint64_t{1} << n;
    std::vector<long long> z(size);
    std::vector<int> rk(size);
    for (std::uint64_t bits = 0; bits < size; ++bits) {
        rk[bits] = m.rank(EdgeSubset(bits));
        z[bits] = (std::popcount(bits) % 2) ? -rk[bits] : rk[bits];
    }
    for (int b = 0; b < n; ++b)
        for (std::uint64_t mask = 0; mask < size; ++mask)
            if (mask >> b & 1) z[mask] += z[mask ^ (std::uint64_t{1} << b)];
    for (std::uint64_t mask = 0; mask < size; ++mask)
        if (rk[mask] % 2) z[mask] = -z[mask];
    return z;
}

}  // namespace

ConnectivityProfile connectivity_sums(const Graph& g, int k_max) {
    if (g.has_self_loop()) throw std::invalid_argument("connectivity_sums: no self-loops");
    int n = g.edge_count();
    if (n > 20) throw std::invalid_argument("connectivity_sums: more than 20 edges");
    Matroid m = Matroid::graphic(g);
    auto beta = beta_table(m);
    std::uint64_t size = std::uint64_t{1} << n;
    ConnectivityProfile prof;
    prof.c.assign(k_max, 0);
    for (std::uint64_t bits = 0; bits < size; ++bits) {
        if (beta[bits] == 0) continue;
        int ra = graphic_rank(g, EdgeSubset(bits));
        int la = std::popcount(bits) - ra;
        Int base = beta[bits];
        if (la % 2) base = -base;
        for (int i = 1; i <= k_max; ++i) {
            if (i > ra) break;
            Int term = base * binomial(ra, i);
            if (i % 2 == 0) term = -term;
            prof.c[i - 1] += term;
        }
    }
    return prof;
}

namespace {

// matroid components of the restriction to a, over a precomputed rank table
int components_from_table(int n, const std::vector<int>& rk, EdgeSubset a) {
    std::array<int, kEdgeCapacity> parent;
    std::iota(parent.begin(), parent.begin() + n, 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    EdgeSubset b;
    int r = 0;
    for_each_bit(a, [&](int e) {
        EdgeSubset c = b;
        c.set(e);
        if (rk[c.bits] > r) {
            b = c;
            ++r;
        }
    });
    int comps = a.count();
    for_each_bit(a - b, [&](int f) {
        EdgeSubset bf = b;
        bf.set(f);
        int anchor = f;
        for_each_bit(b, [&](int e) {
            EdgeSubset c = bf;
            c.reset(e);
            if (rk[c.bits] == r) {
                int x = find(anchor), y = find(e);
                if (x != y) {
                    parent[y] = x;
                    --comps;
                }
                anchor = e;
            }
        });
    });
    return comps;
}

}  // namespace

std::pair<Int, Int> check_thm_1_1(const Matroid& m) {
    int n = m.size();
    if (n > 20) throw std::invalid_argument("check_thm_1_1: more than 20 elements");
    Int lhs = beta_subsets(m) * m.rank();
    long long sum = 0;
    std::uint64_t full = EdgeSubset::full(n).bits;
    const Graph* host = m.host_graph();
    std::vector<int> rk;
    if (!host) {
        rk.resize(full + 1);
        for (std::uint64_t bits = 0; bits <= full; ++bits) rk[bits] = m.rank(EdgeSubset(bits));
    }
    for (std::uint64_t bits = 0;; ++bits) {
        EdgeSubset a(bits);
        int c = host ? block_count(*host, a) : components_from_table(n, rk, a);
        sum += (a.count() % 2) ? -c : c;
        if (bits == full) break;
    }
    Int rhs = sum;
    if (m.rank() % 2) rhs = -rhs;
    return {lhs, rhs};
}

std::pair<Int, Int> check_prop_1_3(const Matroid& m) {
    int n = m.size();
    if (n > 20) throw std::invalid_argument("check_prop_1_3: more than 20 elements");
    Poly g = g_recursive(m);
    Int lhs = g.derivative().evaluate(-1);
    auto beta = beta_table(m);
    Int sum = 0;
    std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < size; ++bits) {
        if (beta[bits] == 0) continue;
        EdgeSubset a(bits);
        int ra = m.rank(a);
        Int term = Int(beta[bits]) * ra;
        if ((a.count() - ra) % 2) term = -term;
        sum += term;
    }
    if (m.components() % 2 == 0) sum = -sum;
    return {lhs, sum};
}

std::pair<Int, Int> check_thm_1_5(const Matroid& m) {
    Poly g = g_recursive(m);
    Int lhs = g.derivative().evaluate(-1);
    int c = m.components();
    Int rhs = c;
    if (c % 2 == 0) rhs = -rhs;
    return {lhs, rhs};
}

}  // namespace gspeyer
