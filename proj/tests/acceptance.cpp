// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <thread>
#include <vector>

#include "gspeyer/cli.hpp"
#include "gspeyer/cycflats.hpp"
#include "gspeyer/enumerate.hpp"
#include "gspeyer/invariants.hpp"
#include "gspeyer/pathmat.hpp"
#include "gspeyer/speyer.hpp"
#include "gspeyer/verify.hpp"

using namespace gspeyer;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, double seconds, const std::string& extra = "") {
    std::printf("%s %-34s %7.2fs %s\n", ok ? "PASS" : "FAIL", id.c_str(), seconds,
                extra.c_str());
    if (!ok) ++failures;
}

template <typename F>
void criterion(const std::string& id, F&& f) {
    auto t0 = Clock::now();
    bool ok = false;
    std::string extra;
    try {
        ok = f(extra);
    } catch (const std::exception& e) {
        extra = std::string("exception: ") + e.what();
    }
    report(id, ok, std::chrono::duration<double>(Clock::now() - t0).count(), extra);
}

Poly poly_of(std::vector<Int> c) { return Poly(std::move(c)); }

Poly g_of(const Graph& g) { return g_recursive(Matroid::graphic(g)); }

Graph k5_plus_k5() {
    TriangleGluing id;
    id.t1 = {0, 1, 2};
    id.t2 = {0, 1, 2};
    return three_sum(complete_graph(5), complete_graph(5), id);
}

std::vector<Graph> load_corpus(const std::string& dir, int max_edges) {
    std::ifstream in(dir + "/corpus_e16.g6");
    if (!in) throw std::runtime_error("fixture corpus not found under " + dir);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) {
            Graph g = parse_graph6(line);
            if (g.edge_count() <= max_edges) out.push_back(std::move(g));
        }
    return out;
}

// run fn over the corpus on all hardware threads; returns number of failures
template <typename Fn>
int parallel_count_failures(const std::vector<Graph>& corpus, Fn fn) {
    std::atomic<size_t> next{0};
    std::atomic<int> bad{0};
    unsigned nt = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= corpus.size()) return;
                if (!fn(corpus[i])) ++bad;
            }
        });
    for (auto& th : pool) th.join();
    return bad.load();
}

}  // namespace

int main(int argc, char** argv) {
    std::string fixtures = argc > 1 ? argv[1] : "fixtures";

    // ---- criterion 1: golden polynomials, exact, each under 5 s ----------
    criterion("1a-gK4", [&](std::string&) {
        return g_of(complete_graph(4)) == poly_of({0, 2, 2, 1});
    });
    criterion("1b-gK5", [&](std::string&) {
        return g_of(complete_graph(5)) == poly_of({0, 6, 15, 15, 5});
    });
    criterion("1c-gK8", [&](std::string&) {
        return g_of(complete_graph(8)) ==
               poly_of({0, 720, 6264, 21448, 37604, 35980, 17934, 3655});
    });
    criterion("1d-gR10", [&](std::string&) {
        return g_recursive(named_matroid("R10").matroid) == poly_of({0, 10, 35, 45, 20, 1});
    });
    criterion("1e-K5plusK5-and-twist", [&](std::string&) {
        Graph g = k5_plus_k5();
        if (g_of(g) != poly_of({0, 24, 109, 202, 183, 81, 14})) return false;
        if (fp2(g_of(g)) != -1) return false;
        if (g_of(g)[1] != 24) return false;  // beta 24, not beta(K5)^2 = 36
        EdgeSubset side_b;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            if ((u == 3 && v == 4) || (u == 4 && v == 3)) side_b.set(e);
        }
        Graph tw = twist(g, {0, 3, 4, 5}, side_b, {0, 1, 2, 3});
        return g_of(tw) == poly_of({0, 18, 75, 126, 99, 35, 4});
    });
    criterion("1f-fig8-trio", [&](std::string&) {
        Graph g = parse_graph6("HoCQXZo");
        if (g_of(g) != poly_of({0, 15, 61, 106, 92, 40, 7})) return false;
        for (const EdgeCut& c : edge_cuts(g, 3)) {
            if (c.trivial) continue;
            std::vector<char> in_a(g.vertex_count, 0);
            for (int v : c.side_a) in_a[v] = 1;
            EdgeSubset ea, eb;
            for (int e = 0; e < g.edge_count(); ++e) {
                if (c.edges.test(e)) continue;
                (in_a[g.edges[e].first] ? ea : eb).set(e);
            }
            Poly pa = g_of(contract(g, eb)), pb = g_of(contract(g, ea));
            Poly w4 = poly_of({0, 3, 5, 4, 1});
            Poly k33 = poly_of({0, 5, 12, 12, 4});
            if ((pa == w4 && pb == k33) || (pa == k33 && pb == w4)) return true;
        }
        return false;
    });
    criterion("1g-fig9-pair", [&](std::string&) {
        return g_of(parse_graph6("I?@TPrK{O")) ==
                   poly_of({0, 38, 204, 480, 621, 474, 212, 51, 5}) &&
               g_of(parse_graph6("I?ClaZOwW")) ==
                   poly_of({0, 38, 204, 476, 604, 446, 190, 43, 4});
    });
    criterion("1h-fig10-pair", [&](std::string&) {
        return g_of(parse_graph6("H?]RCNo")) == poly_of({0, 16, 66, 116, 102, 45, 8}) &&
               g_of(parse_graph6("H_l@Gno")) == poly_of({0, 16, 66, 115, 99, 42, 7});
    });
    criterion("1i-gK1116-factorized", [&](std::string&) {
        // t (3t+2)(2t+1)(t+2)^5
        Poly expect = poly_of({0, 1}) * poly_of({2, 3}) * poly_of({1, 2});
        Poly f = poly_of({2, 1});
        for (int i = 0; i < 5; ++i) expect = expect * f;
        return g_of(complete_multipartite({1, 1, 1, 6})) == expect &&
               g_k111n(6) == expect;
    });

    // ---- criterion 2: closed forms ----------------------------------------
    criterion("2a-wheels-3-12", [&](std::string&) {
        for (int r = 3; r <= 12; ++r)
            if (g_of(wheel(r)) != g_wheel(r)) return false;
        return true;
    });
    criterion("2b-uniform-closed-form", [&](std::string&) {
        for (int n = 2; n <= 9; ++n)
            for (int r = 1; r < n; ++r)
                if (g_recursive(Matroid::uniform(n, r)) != g_uniform(n, r)) return false;
        return true;
    });
    criterion("2c-prism-moebius-n6", [&](std::string&) {
        for (int n = 3; n <= 6; ++n) {
            if (g_of(prism(n)) != g_prism(n)) return false;
            if (g_of(moebius_ladder(n)) != g_moebius(n)) return false;
        }
        return true;
    });
    criterion("2d-zigzag-n10", [&](std::string&) {
        for (int n = 5; n <= 10; ++n)
            if (g_of(circulant(n, {1, 2})) != g_zigzag(n)) return false;
        return true;
    });
    criterion("2e-k3n-k111n-n7", [&](std::string&) {
        for (int n = 3; n <= 7; ++n) {
            if (g_of(complete_multipartite({3, n})) != g_k3n(n)) return false;
            if (g_of(complete_multipartite({1, 1, 1, n})) != g_k111n(n)) return false;
        }
        return true;
    });
    criterion("2f-table5-N-rows", [&](std::string&) {
        const std::vector<std::vector<Int>> rows = {
            {1, 0},
            {1, 0, 1},
            {1, 0, 0, 5},
            {1, 0, 1, -14, 36},
            {1, 0, 0, 35, -245, 329},
            {1, 0, 1, -76, 1135, -3996, 3655},
            {1, 0, 0, 161, -4410, 30219, -68775, 47844},
            {1, 0, 1, -330, 15610, -182952, 769825, -1283150, 721315},
        };
        for (int n = 3; n <= 10; ++n) {
            NExpansion ne = to_n_expansion(g_complete(n));
            std::vector<Int> row = ne.n;
            std::vector<Int> expect = rows[n - 3];
            while (expect.size() > row.size()) row.push_back(0);
            if (row != expect) return false;
            if (n <= 8 && to_n_expansion(g_of(complete_graph(n))).n != ne.n) return false;
        }
        return true;
    });

    // ---- criterion 3: oracle equivalence ----------------------------------
    criterion("3a-recursive-vs-schubert", [&](std::string&) {
        for (const Graph& g : load_corpus(fixtures, 12)) {
            Matroid m = Matroid::graphic(g);
            if (g_recursive(m) != g_via_schubert(m)) return false;
        }
        for (int n = 2; n <= 9; ++n)
            for (int r = 1; r < n; ++r) {
                Matroid m = Matroid::uniform(n, r);
                if (g_recursive(m) != g_via_schubert(m)) return false;
            }
        return true;
    });
    criterion("3b-gpath-vs-delannoy", [&](std::string&) {
        for (std::uint32_t bits = 0; bits < (1u << 10); ++bits) {
            std::vector<bool> w(10);
            for (int i = 0; i < 10; ++i) w[i] = (bits >> i) & 1;
            LatticePath p(w);
            auto counts = delannoy_counts(p);
            Poly sum;
            for (size_t k = 0; k < counts.size(); ++k)
                sum += Poly::monomial(static_cast<int>(k), counts[k]);
            if (sum != g_path(p)) return false;
        }
        return true;
    });

    // ---- criterion 4: identity suites on the <= 16-edge corpus ------------
    std::vector<Graph> corpus = load_corpus(fixtures, 16);
    criterion("4a-evaluations-g", [&](std::string& extra) {
        int bad = parallel_count_failures(corpus, [](const Graph& g) {
            Matroid m = Matroid::graphic(g);
            Poly gp = g_recursive(m);
            int c = m.components();
            Int sign = (c % 2) ? 1 : -1;
            if (gp.evaluate(-1) != -sign) return false;                    // g(-1) = (-1)^c
            if (gp.derivative().evaluate(-1) != sign * c) return false;    // thm 1.5
            NExpansion ne = to_n_expansion(gp);
            if (ne.coeff(0) != 1 || ne.coeff(1) != 0) return false;        // biconnected
            Int beta = beta_subsets(m);
            if (gp.derivative().evaluate(0) != beta) return false;         // g'(0) = beta
            if (beta_tutte(m) != beta) return false;
            if (beta_nuclei(g) != beta) return false;
            Int nsum = 0;
            for (const Int& v : ne.n) nsum += v;
            if (nsum != beta) return false;  // sum N_i = beta
            return true;
        });
        extra = std::to_string(corpus.size()) + " graphs";
        return bad == 0;
    });
    criterion("4b-thm11-graphic-cographic", [&](std::string& extra) {
        int bad = parallel_count_failures(corpus, [](const Graph& g) {
            Matroid m = Matroid::graphic(g);
            auto [gl, gr] = check_thm_1_1(m);
            if (gl != gr) return false;
            auto [dl, dr] = check_thm_1_1(m.dual());
            return dl == dr;
        });
        extra = std::to_string(corpus.size()) + " graphs + duals";
        return bad == 0;
    });
    criterion("4c-counterexamples", [&](std::string&) {
        auto [l1, r1] = check_thm_1_1(Matroid::uniform(4, 2));
        auto [l2, r2] = check_thm_1_1(named_matroid("F7").matroid);
        return l1 == 4 && r1 == 5 && l2 == 9 && r2 == 8;
    });
    criterion("4d-prop13", [&](std::string&) {
        int bad = parallel_count_failures(corpus, [](const Graph& g) {
            auto [lhs, rhs] = check_prop_1_3(Matroid::graphic(g));
            return lhs == rhs;
        });
        if (bad) return false;
        for (int n = 2; n <= 16; ++n)
            for (int r = 1; r < n; ++r) {
                auto [lhs, rhs] = check_prop_1_3(Matroid::uniform(n, r));
                if (lhs != rhs) return false;
                if (lhs != Int(n) - Int(r) * (n - r)) return false;
            }
        return true;
    });
    criterion("4e-thm27-profiles", [&](std::string& extra) {
        ConnectivityProfile w4 = connectivity_sums(wheel(4), 3);
        if (w4.value(1) != 1 || w4.value(2) != 1 || w4.value(3) != 3) return false;
        int bad = parallel_count_failures(corpus, [](const Graph& g) {
            int k = 0;
            while (k < 4 && is_k_connected(g, k + 1)) ++k;
            if (k == 0) return true;
            ConnectivityProfile p = connectivity_sums(g, k);
            for (int i = 1; i < k; ++i)
                if (p.value(i) != 1) return false;
            Int expect = 1;
            for (const VertexCut& c : vertex_cuts(g, k)) expect += c.component_count - 1;
            return p.value(k) == expect;
        });
        extra = std::to_string(corpus.size()) + " graphs";
        return bad == 0;
    });

    // ---- criterion 5: Moebius fixtures -------------------------------------
    criterion("5-moebius-and-chains", [&](std::string&) {
        auto w3 = enumerate_cyclic_flats(Matroid::graphic(wheel(3)));
        MoebiusTable m3(w3);
        if (m3.mu_bottom_top() != 3) return false;
        if (euler_characteristic_oracle(w3) != 3) return false;
        auto w4 = enumerate_cyclic_flats(Matroid::graphic(wheel(4)));
        MoebiusTable m4(w4);
        if (m4.mu_bottom_top() != 0) return false;
        if (euler_characteristic_oracle(w4) != 0) return false;
        // product formula on every maximal chain of W3..W5
        for (int r = 3; r <= 5; ++r) {
            auto lat = enumerate_cyclic_flats(Matroid::graphic(wheel(r)));
            MoebiusTable mt(lat);
            // lambda by the chain recursion, then compare on maximal chains
            std::vector<std::vector<int>> chains;
            std::vector<int> cur{lat.bottom};
            std::function<void(int)> dfs = [&](int node) {
                if (node == lat.top) {
                    chains.push_back(cur);
                    return;
                }
                for (int nx = 0; nx < lat.size(); ++nx) {
                    if (nx == lat.bottom || nx == node) continue;
                    if (lat.elements[node].count() >= lat.elements[nx].count()) continue;
                    if (!lat.elements[node].subset_of(lat.elements[nx])) continue;
                    cur.push_back(nx);
                    dfs(nx);
                    cur.pop_back();
                }
            };
            dfs(lat.bottom);
            std::vector<std::vector<int>> sorted = chains;
            for (auto& c : sorted) std::sort(c.begin(), c.end());
            std::vector<long long> lambda(chains.size());
            std::vector<size_t> order(chains.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                return chains[a].size() > chains[b].size();
            });
            for (size_t oi = 0; oi < order.size(); ++oi) {
                size_t i = order[oi];
                long long s = 1;
                for (size_t oj = 0; oj < oi; ++oj) {
                    size_t j = order[oj];
                    if (chains[j].size() > chains[i].size() &&
                        std::includes(sorted[j].begin(), sorted[j].end(), sorted[i].begin(),
                                      sorted[i].end()))
                        s -= lambda[j];
                }
                lambda[i] = s;
            }
            // maximal chains: every consecutive pair is a cover
            for (size_t i = 0; i < chains.size(); ++i) {
                bool maximal = true;
                for (size_t k = 1; k < chains[i].size() && maximal; ++k) {
                    const auto& covers = lat.covers_up[chains[i][k - 1]];
                    if (std::find(covers.begin(), covers.end(), chains[i][k]) == covers.end())
                        maximal = false;
                }
                if (!maximal) continue;
                long long prod = 1;
                for (size_t k = 1; k < chains[i].size(); ++k)
                    prod *= -mt.mu(chains[i][k - 1], chains[i][k]);
                if (lambda[i] != prod) return false;
            }
        }
        return true;
    });

    // ---- criterion 6: scale target -----------------------------------------
    criterion("6-W12-lattice-and-g", [&](std::string& extra) {
        auto lat = enumerate_cyclic_flats(Matroid::graphic(wheel(12)));
        auto st = lattice_stats(lat);
        extra = "|LCF(W12)| = " + std::to_string(st.element_count);
        return g_of(wheel(12)) == g_wheel(12) && st.element_count > 0;
    });

    // ---- criterion 7: conjecture harness, zero violations ------------------
    for (const std::string& suite :
         {std::string("3sum"), std::string("twist"), std::string("3edge"),
          std::string("4edgetwist"), std::string("planar-n2"), std::string("cubic-tutte")}) {
        criterion("7-" + suite, [&](std::string& extra) {
            std::atomic<long long> sites{0};
            int bad = parallel_count_failures(corpus, [&](const Graph& g) {
                for (const Finding& f : run_suite(suite, g)) {
                    if (f.verdict == Verdict::Skipped) continue;
                    ++sites;
                    if (f.verdict == Verdict::Violates) return false;
                }
                return true;
            });
            extra = std::to_string(sites.load()) + " sites";
            return bad == 0;
        });
    }

    // ---- criterion 8: CSV byte-exactness ------------------------------------
    criterion("8-csv-byte-exact", [&](std::string&) {
        if (compute_record("C~") != "C~,4,6,1,t^3+2*t^2+2*t") return false;
        // through the CLI path as well
        std::string in_path = "acceptance_tmp.g6", out_path = "acceptance_tmp.csv";
        {
            std::ofstream f(in_path);
            f << "C~\n";
        }
        std::ostringstream out, err;
        int code = cli_main({"compute", "--input", in_path, "--output", out_path}, out, err);
        std::ifstream csv(out_path);
        std::string line;
        std::getline(csv, line);
        std::remove(in_path.c_str());
        std::remove(out_path.c_str());
        return code == 0 && line == "C~,4,6,1,t^3+2*t^2+2*t";
    });

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
