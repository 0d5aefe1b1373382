#include <doctest.h>

#include <algorithm>
#include <set>

#include "gspeyer/cycflats.hpp"
#include "gspeyer/enumerate.hpp"

using namespace gspeyer;

TEST_CASE("wheel lattices") {
    auto w3 = enumerate_cyclic_flats(Matroid::graphic(wheel(3)));
    CHECK(w3.size() == 6);  // empty, four triangles, full
    CHECK(w3.elements[w3.bottom].empty());
    CHECK(w3.elements[w3.top] == EdgeSubset::full(6));

    auto w4 = enumerate_cyclic_flats(Matroid::graphic(wheel(4)));
    CHECK(w4.size() == 11);  // empty, 4 triangles, 4 five-edge flats, rim, full
    std::multiset<int> sizes;
    for (auto e : w4.elements) sizes.insert(e.count());
    CHECK(sizes == std::multiset<int>({0, 3, 3, 3, 3, 4, 5, 5, 5, 5, 8}));
}

TEST_CASE("uniform matroids have only the trivial cyclic flats") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r < n; ++r) {
            auto lat = enumerate_cyclic_flats(Matroid::uniform(n, r));
            CHECK(lat.size() == 2);
        }
}

TEST_CASE("enumerate agrees with brute force") {
    std::vector<Graph> gs = {wheel(3), wheel(4), prism(3), complete_graph(5),
                             complete_multipartite({3, 3})};
    // a multigraph with parallels and nested blocks
    gs.push_back(Graph(5, {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {3, 4}}));
    // graph with a self-loop and a bridge
    gs.push_back(Graph(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 1}, {1, 2}}));
    for (const Graph& g : gs) {
        auto lat = enumerate_cyclic_flats(Matroid::graphic(g));
        auto brute = cyclic_flats_bruteforce(Matroid::graphic(g));
        REQUIRE(lat.size() == static_cast<int>(brute.size()));
        for (int i = 0; i < lat.size(); ++i) CHECK(lat.elements[i] == brute[i]);
    }
    // non-graphic realizations run through the brute-force path
    auto f7 = enumerate_cyclic_flats(named_matroid("F7").matroid);
    CHECK(f7.size() == 9);  // empty, 7 lines, full
}

TEST_CASE("lattice closure under meet and join") {
    for (const Graph& g : {wheel(4), wheel(5), prism(3)}) {
        Matroid m = Matroid::graphic(g);
        auto lat = enumerate_cyclic_flats(m);
        for (int i = 0; i < lat.size(); ++i)
            for (int j = i + 1; j < lat.size(); ++j) {
                EdgeSubset meet = m.cyclic_core(lat.elements[i] & lat.elements[j]);
                EdgeSubset join = m.closure(lat.elements[i] | lat.elements[j]);
                CHECK(lat.index_of(meet) >= 0);
                CHECK(lat.index_of(join) >= 0);
            }
    }
}

TEST_CASE("every element is a cyclic flat") {
    Matroid m = Matroid::graphic(complete_graph(5));
    auto lat = enumerate_cyclic_flats(m);
    for (int i = 0; i < lat.size(); ++i) {
        EdgeSubset e = lat.elements[i];
        CHECK(m.closure(e) == e);
        CHECK(m.cyclic_core(e) == e);
        CHECK(lat.rank[i] == m.rank(e));
        CHECK(lat.corank[i] == e.count() - m.rank(e));
    }
}

TEST_CASE("moebius values on wheels") {
    auto w3 = enumerate_cyclic_flats(Matroid::graphic(wheel(3)));
    MoebiusTable m3(w3);
    CHECK(m3.mu_bottom_top() == 3);
    for (int i = 0; i < w3.size(); ++i) CHECK(m3.mu(i, i) == 1);

    auto w4 = enumerate_cyclic_flats(Matroid::graphic(wheel(4)));
    MoebiusTable m4(w4);
    CHECK(m4.mu_bottom_top() == 0);
}

TEST_CASE("moebius row sums vanish") {
    auto lat = enumerate_cyclic_flats(Matroid::graphic(prism(3)));
    MoebiusTable mt(lat);
    for (int b = 0; b < lat.size(); ++b)
        for (int a : lat.below[b]) {
            // sum_{a <= c <= b} mu(c, b) = 0 for a < b
            std::int64_t s = mt.mu(a, b) + 1;  // c = a and c = b
            for (int c : lat.below[b])
                if (c != a && lat.elements[a].subset_of(lat.elements[c])) s += mt.mu(c, b);
            CHECK(s == 0);
        }
}

TEST_CASE("euler characteristic oracle equals moebius") {
    for (const Graph& g : {wheel(3), wheel(4), wheel(5), prism(3), complete_graph(5)}) {
        auto lat = enumerate_cyclic_flats(Matroid::graphic(g));
        MoebiusTable mt(lat);
        CHECK(euler_characteristic_oracle(lat) == mt.mu_bottom_top());
    }
    // two-element chain lattice: order complex empty, reduced chi = -1
    auto u = enumerate_cyclic_flats(Matroid::uniform(4, 2));
    CHECK(euler_characteristic_oracle(u) == -1);
    CHECK(MoebiusTable(u).mu_bottom_top() == -1);
}

TEST_CASE("euler oracle matches moebius on every interval") {
    // restrict the lattice to an interval and compare
    Matroid m = Matroid::graphic(wheel(4));
    auto lat = enumerate_cyclic_flats(m);
    MoebiusTable mt(lat);
    for (int b = 0; b < lat.size(); ++b)
        for (int a : lat.below[b]) {
            // build the interval [a, b] as its own little lattice
            CyclicFlatLattice sub;
            for (int c = 0; c < lat.size(); ++c)
                if ((c == a || c == b ||
                     (lat.elements[a].subset_of(lat.elements[c]) &&
                      lat.elements[c].subset_of(lat.elements[b]))) &&
                    true)
                    sub.elements.push_back(lat.elements[c]);
            sub.rank.assign(sub.elements.size(), 0);
            sub.corank.assign(sub.elements.size(), 0);
            sub.bottom = 0;
            sub.top = static_cast<int>(sub.elements.size()) - 1;
            sub.below.assign(sub.elements.size(), {});
            for (size_t j = 0; j < sub.elements.size(); ++j)
                for (size_t i = 0; i < j; ++i)
                    if (sub.elements[i].count() < sub.elements[j].count() &&
                        sub.elements[i].subset_of(sub.elements[j]))
                        sub.below[j].push_back(static_cast<int>(i));
            CHECK(euler_characteristic_oracle(sub) == mt.mu(a, b));
        }
}

TEST_CASE("lattice stats") {
    auto w3 = enumerate_cyclic_flats(Matroid::graphic(wheel(3)));
    auto st = lattice_stats(w3);
    CHECK(st.element_count == 6);
    CHECK(st.hasse_edge_count == 8);
    CHECK(st.comparable_pair_count == 9);

    auto u = enumerate_cyclic_flats(Matroid::uniform(5, 2));
    auto stu = lattice_stats(u);
    CHECK(stu.element_count == 2);
    CHECK(stu.hasse_edge_count == 1);
    CHECK(stu.comparable_pair_count == 1);
}

TEST_CASE("chain-lattice product formula") {
    // lambda of a chain via the recursion lambda_C = 1 - sum_{D > C} lambda_D
    // equals the product of -mu over consecutive links
    for (const Graph& g : {wheel(3), wheel(4), wheel(5)}) {
        auto lat = enumerate_cyclic_flats(Matroid::graphic(g));
        MoebiusTable mt(lat);
        // enumerate all chains bottom < ... < top as index sequences
        std::vector<std::vector<int>> chains;
        std::vector<int> cur{lat.bottom};
        auto dfs = [&](auto&& self, int node) -> void {
            if (node == lat.top) {
                chains.push_back(cur);
                return;
            }
            for (int nx = 0; nx < lat.size(); ++nx) {
                if (nx == node || nx == lat.bottom) continue;
                if (!lat.elements[node].subset_of(lat.elements[nx])) continue;
                if (lat.elements[node].count() >= lat.elements[nx].count()) continue;
                cur.push_back(nx);
                self(self, nx);
                cur.pop_back();
            }
        };
        dfs(dfs, lat.bottom);
        // refinement order: chain C <= chain D iff C's node set is a subset
        auto refines = [](const std::vector<int>& c, const std::vector<int>& d) {
            return std::includes(d.begin(), d.end(), c.begin(), c.end());
        };
        std::vector<std::vector<int>> sorted_chains = chains;
        for (auto& c : sorted_chains) std::sort(c.begin(), c.end());
        std::vector<std::int64_t> lambda(chains.size());
        // process by descending length
        std::vector<size_t> order(chains.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
            return chains[x].size() > chains[y].size();
        });
        for (size_t oi = 0; oi < order.size(); ++oi) {
            size_t i = order[oi];
            std::int64_t s = 1;
            for (size_t oj = 0; oj < oi; ++oj) {
                size_t j = order[oj];
                if (chains[j].size() > chains[i].size() &&
                    refines(sorted_chains[i], sorted_chains[j]))
                    s -= lambda[j];
            }
            lambda[i] = s;
        }
        for (size_t i = 0; i < chains.size(); ++i) {
            std::int64_t prod = 1;
            for (size_t k = 1; k < chains[i].size(); ++k)
                prod *= -mt.mu(chains[i][k - 1], chains[i][k]);
            CHECK(lambda[i] == prod);
        }
    }
}

TEST_CASE("dot dump") {
    auto lat = enumerate_cyclic_flats(Matroid::graphic(wheel(3)));
    std::string dot = dot_dump(lat);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
