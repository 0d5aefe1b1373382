#include "gspeyer/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gspeyer/invariants.hpp"
#include "gspeyer/matroid.hpp"
#include "gspeyer/speyer.hpp"

namespace gspeyer {

namespace {

Int n2_of(const Graph& g) { return fp2(g_recursive(Matroid::graphic(g))); }

std::string safe_graph6(const Graph& g) {
    if (g.is_simple() && g.vertex_count <= 62) return write_graph6(g);
    return "<multigraph:" + std::to_string(g.vertex_count) + "v," +
           std::to_string(g.edge_count()) + "e>";
}

Finding make(const std::string& id, const std::string& inputs, Int lhs, Int rhs,
             const std::string& note = "") {
    Finding f;
    f.conjecture_id = id;
    f.inputs = inputs;
    f.lhs = lhs.str();
    f.rhs = rhs.str();
    f.verdict = (lhs == rhs) ? Verdict::Agrees : Verdict::Violates;
    f.note = note;
    return f;
}

Finding skipped(const std::string& id, const std::string& inputs, const std::string& reason) {
    Finding f;
    f.conjecture_id = id;
    f.inputs = inputs;
    f.verdict = Verdict::Skipped;
    f.note = reason;
    return f;
}

// one edge between each vertex pair of the triangle; throws if a pair is absent
EdgeSubset triangle_edges(const Graph& g, const std::array<int, 3>& t) {
    EdgeSubset out;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int found = -1;
            for (int e = 0; e < g.edge_count() && found == -1; ++e) {
                auto [u, v] = g.edges[e];
                if (out.test(e)) continue;
                if ((u == t[i] && v == t[j]) || (u == t[j] && v == t[i])) found = e;
            }
            if (found == -1) throw std::invalid_argument("triangle edge missing");
            out.set(found);
        }
    return out;
}

}  // namespace

std::string Finding::csv_line() const {
    std::string v = verdict == Verdict::Agrees    ? "agrees"
                    : verdict == Verdict::Violates ? "violates"
                                                   : "skipped(" + note + ")";
    return conjecture_id + "," + inputs + "," + lhs + "," + rhs + "," + v;
}

Graph three_sum(const Graph& g1, const Graph& g2, const TriangleGluing& id) {
    EdgeSubset t1 = triangle_edges(g1, id.t1);
    EdgeSubset t2 = triangle_edges(g2, id.t2);
    // glue: t2[i] of g2 becomes t1[i] of g1; other g2 vertices appended
    std::vector<int> map(g2.vertex_count, -1);
    for (int i = 0; i < 3; ++i) map[id.t2[i]] = id.t1[i];
    int next = g1.vertex_count;
    for (int v = 0; v < g2.vertex_count; ++v)
        if (map[v] == -1) map[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g1.edge_count(); ++e)
        if (!t1.test(e)) edges.push_back(g1.edges[e]);
    for (int e = 0; e < g2.edge_count(); ++e)
        if (!t2.test(e)) edges.push_back({map[g2.edges[e].first], map[g2.edges[e].second]});
    return Graph(next, std::move(edges));
}

Finding check_three_sum(const Graph& g1, const TriangleGluing& id, const Graph& g2) {
    std::string inputs = safe_graph6(g1) + "|" + safe_graph6(g2);
    if (!is_k_connected(simplify(g1), 3) || !is_k_connected(simplify(g2), 3))
        return skipped("3sum", inputs, "inputs not 3-connected");
    Graph sum = three_sum(g1, g2, id);
    Int p1 = component_count(delete_vertices(g1, {id.t1[0], id.t1[1], id.t1[2]}));
    Int p2 = component_count(delete_vertices(g2, {id.t2[0], id.t2[1], id.t2[2]}));
    Int lhs = n2_of(sum);
    Int rhs = n2_of(g1) + n2_of(g2) - p1 * p2;
    return make("3sum", inputs, lhs, rhs);
}

Finding check_star_triangle(const Graph& g, int v) {
    std::string inputs = safe_graph6(g);
    std::set<int> nb;
    for (auto& [a, b] : g.edges) {
        if (a == v && b != v) nb.insert(b);
        if (b == v && a != v) nb.insert(a);
    }
    if (g.degree(v) != 3 || nb.size() != 3)
        return skipped("star-triangle", inputs, "vertex not 3-valent");
    if (!is_k_connected(simplify(g), 3))
        return skipped("star-triangle", inputs, "not 3-connected");
    std::vector<int> s(nb.begin(), nb.end());
    // G_v: delete v, add the triangle on its neighbours
    Graph gv = g;
    gv.edges.erase(std::remove_if(gv.edges.begin(), gv.edges.end(),
                                  [&](auto& e) { return e.first == v || e.second == v; }),
                   gv.edges.end());
    gv.edges.push_back({s[0], s[1]});
    gv.edges.push_back({s[0], s[2]});
    gv.edges.push_back({s[1], s[2]});
    Int extra = component_count(delete_vertices(g, s)) - 2;  // isolated v counts
    Int lhs = n2_of(g);
    Int rhs = n2_of(gv) - extra;
    return make("star-triangle", inputs, lhs, rhs, "v=" + std::to_string(v));
}

namespace {

// components of g minus the cut vertices; returns component id per vertex
// (-1 on the cut) and the component count
std::pair<std::vector<int>, int> cut_components(const Graph& g, const std::vector<int>& cut) {
    std::vector<int> comp(g.vertex_count, -1);
    std::vector<char> is_cut(g.vertex_count, 0);
    for (int v : cut) is_cut[v] = 1;
    int nc = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (is_cut[v] || comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = nc;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto& [a, b] : g.edges) {
                int w = -1;
                if (a == x) w = b;
                if (b == x) w = a;
                if (w >= 0 && !is_cut[w] && comp[w] == -1) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    return {comp, nc};
}

bool minimal_vertex_cut(const Graph& g, const std::vector<int>& cut) {
    auto [comp, nc] = cut_components(g, cut);
    if (nc < 2) return false;
    for (size_t skip = 0; skip < cut.size(); ++skip) {
        std::vector<int> sub;
        for (size_t i = 0; i < cut.size(); ++i)
            if (i != skip) sub.push_back(cut[i]);
        if (cut_components(g, sub).second >= 2) return false;
    }
    return true;
}

}  // namespace

Graph twist(const Graph& g, const std::vector<int>& cut, EdgeSubset side_b,
            const std::array<int, 4>& labels) {
    if (cut.size() != 4) throw std::invalid_argument("twist: cut must have 4 vertices");
    // map applied to side-B endpoints on the cut: l0 <-> l1, l2 <-> l3
    std::vector<int> swap_to(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) swap_to[v] = v;
    std::vector<char> on_cut(g.vertex_count, 0);
    for (int v : cut) on_cut[v] = 1;
    swap_to[cut[labels[0]]] = cut[labels[1]];
    swap_to[cut[labels[1]]] = cut[labels[0]];
    swap_to[cut[labels[2]]] = cut[labels[3]];
    swap_to[cut[labels[3]]] = cut[labels[2]];
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (side_b.test(e)) {
            if (on_cut[u]) u = swap_to[u];
            if (on_cut[v]) v = swap_to[v];
        }
        edges.push_back({u, v});
    }
    return Graph(g.vertex_count, std::move(edges));
}

// every vertex off the cut must have all its edges on one side
bool sides_meet_only_at_cut(const Graph& g, const std::vector<int>& cut, EdgeSubset side_b) {
    std::vector<char> on_cut(g.vertex_count, 0);
    for (int v : cut) on_cut[v] = 1;
    std::vector<int> side_of(g.vertex_count, -1);  // 0 = A, 1 = B
    for (int e = 0; e < g.edge_count(); ++e) {
        int s = side_b.test(e) ? 1 : 0;
        for (int v : {g.edges[e].first, g.edges[e].second}) {
            if (on_cut[v]) continue;
            if (side_of[v] == -1)
                side_of[v] = s;
            else if (side_of[v] != s)
                return false;
        }
    }
    return true;
}

Finding check_twist(const Graph& g, const std::vector<int>& cut, EdgeSubset side_b,
                    const std::array<int, 4>& labels) {
    std::string inputs = safe_graph6(g);
    if (!is_k_connected(simplify(g), 3)) return skipped("twist", inputs, "not 3-connected");
    if (!minimal_vertex_cut(g, cut)) return skipped("twist", inputs, "cut not minimal");
    if (!sides_meet_only_at_cut(g, cut, side_b))
        throw std::invalid_argument("check_twist: sides meet outside the cut");
    Graph tw = twist(g, cut, side_b, labels);
    std::ostringstream note;
    note << "cut={";
    for (size_t i = 0; i < cut.size(); ++i) note << (i ? "," : "") << cut[i];
    note << "} b=" << side_b.bits;
    return make("twist", inputs, n2_of(g), n2_of(tw), note.str());
}

Finding check_three_edge_cut(const Graph& g, const EdgeCut& cut) {
    std::string inputs = safe_graph6(g);
    if (cut.trivial) throw std::invalid_argument("check_three_edge_cut: trivial cut");
    if (!is_k_connected(simplify(g), 3)) return skipped("3edge", inputs, "not 3-connected");
    // contract each side in turn
    std::vector<char> in_a(g.vertex_count, 0);
    for (int v : cut.side_a) in_a[v] = 1;
    EdgeSubset side_a_edges, side_b_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (cut.edges.test(e)) continue;
        (in_a[g.edges[e].first] ? side_a_edges : side_b_edges).set(e);
    }
    Graph a = contract(g, side_b_edges);  // A = G/T keeps the S side
    Graph b = contract(g, side_a_edges);
    Poly gg = g_recursive(Matroid::graphic(g));
    Poly ga = g_recursive(Matroid::graphic(a));
    Poly gb = g_recursive(Matroid::graphic(b));
    Poly prod = compose_two_sum(ga, gb);
    Finding f;
    f.conjecture_id = "3edge";
    f.inputs = inputs;
    f.lhs = gg[1].str() + ";" + gg[2].str();
    f.rhs = prod[1].str() + ";" + prod[2].str();
    f.verdict = (gg[1] == prod[1] && gg[2] == prod[2]) ? Verdict::Agrees : Verdict::Violates;
    return f;
}

Graph four_edge_twist(const Graph& g, const EdgeCut& cut, int pairing) {
    if (cut.edges.count() != 4) throw std::invalid_argument("four_edge_twist: need 4 edges");
    std::vector<int> es;
    for_each_bit(cut.edges, [&](int e) { es.push_back(e); });
    std::vector<char> in_a(g.vertex_count, 0);
    for (int v : cut.side_a) in_a[v] = 1;
    // orient cut edges as (a_i, b_i) with a_i on side_a
    std::array<int, 4> av{}, bv{};
    for (int i = 0; i < 4; ++i) {
        auto [u, v] = g.edges[es[i]];
        av[i] = in_a[u] ? u : v;
        bv[i] = in_a[u] ? v : u;
    }
    static const std::array<std::array<int, 4>, 3> partner = {{{1, 0, 3, 2},
                                                               {2, 3, 0, 1},
                                                               {3, 2, 1, 0}}};
    const auto& pm = partner.at(pairing);
    std::vector<std::pair<int, int>> edges = g.edges;
    for (int i = 0; i < 4; ++i) edges[es[i]] = {av[i], bv[pm[i]]};
    return Graph(g.vertex_count, std::move(edges));
}

Finding check_four_edge_twist(const Graph& g, const EdgeCut& cut, int pairing) {
    std::string inputs = safe_graph6(g);
    Graph tw = four_edge_twist(g, cut, pairing);
    Poly g1 = g_recursive(Matroid::graphic(g));
    Poly g2 = g_recursive(Matroid::graphic(tw));
    bool g_ok = g1[1] == g2[1] && g1[2] == g2[2];
    bool flow_ok = flow_poly(g) == flow_poly(tw);
    Finding f;
    f.conjecture_id = "4edgetwist";
    f.inputs = inputs;
    f.lhs = g1[1].str() + ";" + g1[2].str() + (flow_ok ? ";flow=" : ";flow!=");
    f.rhs = g2[1].str() + ";" + g2[2].str() + (flow_ok ? ";flow=" : ";flow!=");
    f.verdict = (g_ok && flow_ok) ? Verdict::Agrees : Verdict::Violates;
    f.note = "pairing=" + std::to_string(pairing);
    return f;
}

Finding check_planar_n2(const Graph& g) {
    std::string inputs = safe_graph6(g);
    if (!is_k_connected(simplify(g), 3)) return skipped("planar-n2", inputs, "not 3-connected");
    if (!is_planar(g)) return skipped("planar-n2", inputs, "not planar");
    return make("planar-n2", inputs, n2_of(g), 1);
}

Finding check_planar_n3(const Graph& g) {
    std::string inputs = safe_graph6(g);
    if (!is_k_connected(simplify(g), 4)) return skipped("planar-n3", inputs, "not 4-connected");
    if (!is_planar(g)) return skipped("planar-n3", inputs, "not planar");
    Int n3 = to_n_expansion(g_recursive(Matroid::graphic(g))).coeff(3);
    return make("planar-n3", inputs, n3, 0);
}

Finding check_cubic_tutte(const Graph& g) {
    std::string inputs = safe_graph6(g);
    if (!is_connected(g)) return skipped("cubic-tutte", inputs, "not connected");
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) != 3) return skipped("cubic-tutte", inputs, "not 3-regular");
    Poly gp = g_recursive(Matroid::graphic(g));
    Int lhs = gp[2] * 2;  // g''(0)
    TuttePoly tp = tutte_graph(g);
    Int rhs = Int(2 * g.vertex_count) * tp.coeff(0, 1) - Int(4) * tp.coeff(0, 2);
    return make("cubic-tutte", inputs, lhs, rhs);
}

namespace {

std::vector<Finding> suite_3sum(const Graph& g) {
    std::vector<Finding> out;
    Graph s = simplify(g);
    if (!is_k_connected(s, 3)) return out;
    std::string g6 = safe_graph6(g);
    Int n2g = n2_of(g);
    for (const VertexCut& vc : vertex_cuts(g, 3)) {
        auto [comp, nc] = cut_components(g, vc.vertices);
        if (nc < 2) continue;
        std::vector<char> in_cut(g.vertex_count, 0);
        for (int v : vc.vertices) in_cut[v] = 1;
        for (std::uint32_t mask = 1; mask + 1 < (1u << nc); ++mask) {
            if (mask & 1) continue;  // component 0 stays on side A: no double count
            // side of each edge; edges inside the cut go to side A
            std::vector<std::pair<int, int>> ea, eb;
            for (auto& [u, v] : g.edges) {
                int cu = in_cut[u] ? -1 : comp[u];
                int cv = in_cut[v] ? -1 : comp[v];
                int c = std::max(cu, cv);
                if (c >= 0 && (mask >> c & 1))
                    eb.push_back({u, v});
                else
                    ea.push_back({u, v});
            }
            // add the gluing triangle on the cut to both parts
            auto with_triangle = [&](std::vector<std::pair<int, int>> es) {
                es.push_back({vc.vertices[0], vc.vertices[1]});
                es.push_back({vc.vertices[0], vc.vertices[2]});
                es.push_back({vc.vertices[1], vc.vertices[2]});
                return Graph(g.vertex_count, std::move(es));
            };
            if (ea.empty() || eb.empty()) continue;
            Graph g1 = with_triangle(ea), g2 = with_triangle(eb);
            // each side keeps exactly its components of G minus the cut
            Int p1 = nc - std::popcount(mask);
            Int p2 = std::popcount(mask);
            Int rhs = n2_of(g1) + n2_of(g2) - p1 * p2;
            out.push_back(make("3sum", g6, n2g, rhs));
        }
    }
    return out;
}

std::vector<std::pair<int, int>> edge_multiset_key(const Graph& g) {
    std::vector<std::pair<int, int>> key;
    key.reserve(g.edges.size());
    for (auto [u, v] : g.edges) key.push_back({std::min(u, v), std::max(u, v)});
    std::sort(key.begin(), key.end());
    return key;
}

std::vector<Finding> suite_twist(const Graph& g) {
    std::vector<Finding> out;
    if (!is_k_connected(simplify(g), 3)) return out;
    static const std::array<std::array<int, 4>, 3> labelings = {{{0, 1, 2, 3},
                                                                 {0, 2, 1, 3},
                                                                 {0, 3, 1, 2}}};
    std::string g6 = safe_graph6(g);
    Int n2g = n2_of(g);
    std::set<std::vector<std::pair<int, int>>> seen{edge_multiset_key(g)};
    for (const VertexCut& vc : vertex_cuts(g, 4)) {
        if (!minimal_vertex_cut(g, vc.vertices)) continue;
        auto [comp, nc] = cut_components(g, vc.vertices);
        std::vector<char> on_cut(g.vertex_count, 0);
        for (int v : vc.vertices) on_cut[v] = 1;
        // edge masks per component, plus the edges inside the cut
        std::vector<EdgeSubset> comp_edges(nc);
        std::vector<int> inner;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            if (on_cut[u] && on_cut[v])
                inner.push_back(e);
            else
                comp_edges[on_cut[u] ? comp[v] : comp[u]].set(e);
        }
        // side B: any components except the first, plus any inner edges
        for (std::uint32_t mask = 0; mask < (1u << nc); mask += 2) {
            EdgeSubset base;
            for (int c = 0; c < nc; ++c)
                if (mask >> c & 1) base = base | comp_edges[c];
            for (std::uint32_t im = 0; im < (1u << inner.size()); ++im) {
                if (mask == 0 && im == 0) continue;
                EdgeSubset side_b = base;
                for (size_t k = 0; k < inner.size(); ++k)
                    if (im >> k & 1) side_b.set(inner[k]);
                for (const auto& lab : labelings) {
                    Graph tw = twist(g, vc.vertices, side_b, lab);
                    if (!seen.insert(edge_multiset_key(tw)).second) continue;
                    std::ostringstream note;
                    note << "cut={";
                    for (size_t i = 0; i < vc.vertices.size(); ++i)
                        note << (i ? "," : "") << vc.vertices[i];
                    note << "} b=" << side_b.bits;
                    out.push_back(make("twist", g6, n2g, n2_of(tw), note.str()));
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Finding> run_suite(const std::string& suite, const Graph& g) {
    std::vector<Finding> out;
    std::string g6 = safe_graph6(g);
    if (suite == "thm11") {
        Matroid m = Matroid::graphic(g);
        auto [l1, r1] = check_thm_1_1(m);
        out.push_back(make("thm11", g6, l1, r1, "graphic"));
        auto [l2, r2] = check_thm_1_1(m.dual());
        Finding f = make("thm11", g6, l2, r2, "cographic");
        out.push_back(f);
    } else if (suite == "thm12") {
        if (g.has_self_loop()) {
            out.push_back(skipped("thm12", g6, "self-loop"));
            return out;
        }
        int k = 0;
        while (k < 4 && is_k_connected(g, k + 1)) ++k;
        if (k == 0) {
            out.push_back(skipped("thm12", g6, "disconnected"));
            return out;
        }
        ConnectivityProfile prof = connectivity_sums(g, k);
        for (int i = 1; i < k; ++i)
            out.push_back(make("thm12", g6, prof.value(i), 1, "c_" + std::to_string(i)));
        Int expect = 1;
        for (const VertexCut& vc : vertex_cuts(g, k)) expect += vc.component_count - 1;
        out.push_back(make("thm12", g6, prof.value(k), expect, "c_" + std::to_string(k)));
    } else if (suite == "thm15") {
        Matroid m = Matroid::graphic(g);
        if (!m.loops().empty() || !m.coloops().empty()) {
            out.push_back(skipped("thm15", g6, "loops or coloops"));
            return out;
        }
        auto [lhs, rhs] = check_thm_1_5(m);
        out.push_back(make("thm15", g6, lhs, rhs));
    } else if (suite == "3sum") {
        out = suite_3sum(g);
    } else if (suite == "twist") {
        out = suite_twist(g);
    } else if (suite == "3edge") {
        if (!is_k_connected(simplify(g), 3)) return out;
        for (const EdgeCut& c : edge_cuts(g, 3))
            if (!c.trivial) out.push_back(check_three_edge_cut(g, c));
    } else if (suite == "4edgetwist") {
        auto cuts = edge_cuts(g, 4);
        if (!cuts.empty()) {
            Poly gp = g_recursive(Matroid::graphic(g));
            Poly fp = flow_poly(g);
            std::set<std::vector<std::pair<int, int>>> seen{edge_multiset_key(g)};
            for (const EdgeCut& c : cuts)
                for (int pairing = 0; pairing < 3; ++pairing) {
                    Graph tw = four_edge_twist(g, c, pairing);
                    if (!seen.insert(edge_multiset_key(tw)).second) continue;
                    Poly tp = g_recursive(Matroid::graphic(tw));
                    bool g_ok = gp[1] == tp[1] && gp[2] == tp[2];
                    bool flow_ok = fp == flow_poly(tw);
                    Finding f;
                    f.conjecture_id = "4edgetwist";
                    f.inputs = g6;
                    f.lhs = gp[1].str() + ";" + gp[2].str() + (flow_ok ? ";flow=" : ";flow!=");
                    f.rhs = tp[1].str() + ";" + tp[2].str() + (flow_ok ? ";flow=" : ";flow!=");
                    f.verdict = (g_ok && flow_ok) ? Verdict::Agrees : Verdict::Violates;
                    f.note = "pairing=" + std::to_string(pairing);
                    out.push_back(std::move(f));
                }
        }
    } else if (suite == "planar-n2") {
        out.push_back(check_planar_n2(g));
    } else if (suite == "planar-n3") {
        out.push_back(check_planar_n3(g));
    } else if (suite == "cubic-tutte") {
        out.push_back(check_cubic_tutte(g));
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return out;
}

std::vector<std::string> known_suites() {
    return {"thm11", "thm12",      "thm15",     "3sum",      "twist",
            "3edge", "4edgetwist", "planar-n2", "planar-n3", "cubic-tutte"};
}

}  // namespace gspeyer
