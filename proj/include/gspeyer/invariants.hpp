#pragma once

#include <utility>
#include <vector>

#include "gspeyer/graph.hpp"
#include "gspeyer/matroid.hpp"
#include "gspeyer/poly.hpp"

namespace gspeyer {

/// Tutte polynomial as a coefficient matrix t_{i,j} of x^i y^j.
struct TuttePoly {
    std::vector<std::vector<Int>> t;  // t[i][j]
    const Int& coeff(int i, int j) const;
    Int beta() const { return coeff(1, 0); }
    Int evaluate(const Int& x, const Int& y) const;
    bool operator==(const TuttePoly&) const = default;
};

/// Subset-sum route (any matroid, <= 24 elements).
TuttePoly tutte_subsets(const Matroid& m);
/// Deletion-contraction with loop/bridge factoring and a memo keyed by the
/// sorted edge multiset of the reduced multigraph.
TuttePoly tutte_graph(const Graph& g);
/// Dispatch: deletion-contraction for graphic matroids, subset sum otherwise.
TuttePoly tutte(const Matroid& m);

/// Crapo beta, three independent routes.
Int beta_subsets(const Matroid& m);
Int beta_tutte(const Matroid& m);
Int beta_nuclei(const Graph& g);

/// Signed nucleus sums per vertex: sum over nuclei containing v of
/// (-1)^{#edges}; each entry vanishes for graphs with at least one edge.
std::vector<Int> elser_vertex_sums(const Graph& g);

/// Flow polynomial F(q) = (-1)^{corank} T(0, 1-q).
Poly flow_poly(const Graph& g);

struct ConnectivityProfile {
    std::vector<Int> c;  // c[i-1] holds c_i
    const Int& value(int i) const { return c.at(i - 1); }
};

/// c_i(G) = (-1)^{i-1} sum_A (-1)^{corank A} beta(A) C(rank A, i), i = 1..k_max.
/// Subset-sum pass with a beta table over all edge subsets (<= 20 edges,
/// no self-loops).
ConnectivityProfile connectivity_sums(const Graph& g, int k_max);

/// Identity checkers return (lhs, rhs) pairs; the caller compares, since the
/// identities are known to fail off the graphic/cographic domain.
std::pair<Int, Int> check_thm_1_1(const Matroid& m);  // beta*rk vs alternating c(A) sum
std::pair<Int, Int> check_prop_1_3(const Matroid& m); // g'(-1) vs signed beta*rk sum
std::pair<Int, Int> check_thm_1_5(const Matroid& m);  // g'(-1) vs (-1)^{c-1} c

}  // namespace gspeyer
