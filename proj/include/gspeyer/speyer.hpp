#pragma once

#include <string>
#include <vector>

#include "gspeyer/cycflats.hpp"
#include "gspeyer/matroid.hpp"
#include "gspeyer/pathmat.hpp"
#include "gspeyer/poly.hpp"

namespace gspeyer {

/// Coefficient vector (N_0, N_1, ...) of g = t * sum_i N_i (1+t)^i.
struct NExpansion {
    std::vector<Int> n;
    const Int& coeff(size_t i) const;
};

NExpansion to_n_expansion(const Poly& g);
Poly from_n_expansion(const NExpansion& v);
/// N_2, the headline graph invariant (0 for the zero polynomial).
Int fp2(const Poly& g);

/// Q^{(1)}_{r,l}(t) = sum_i C(r,i) C(l,i) t^i
Poly q1(int r, int l);
/// Q^{(2)}_{r,l}(t) = sum_{i>=1} C(r,i-1) C(l,i) t^i
Poly q2(int r, int l);

/// Speyer polynomial by the recursive cyclic-flat algorithm. Returns the zero
/// polynomial when m has loops or coloops; disconnected matroids are handled
/// by the lattice directly (no pre-splitting).
Poly g_recursive(const Matroid& m);

struct SchubertDecomposition {
    std::vector<std::pair<LatticePath, Int>> terms;  // (path, multiplier), sorted by path
    /// "-3 Schubert(6, {1, 2, 3}) + 4 Schubert(6, {1, 2, 4})"
    std::string to_string() const;
};

/// Chains of the cyclic-flat lattice aggregated by lattice path, with
/// multipliers from the Moebius product formula; zero multipliers dropped.
SchubertDecomposition schubert_decomposition(const Matroid& m,
                                             std::uint64_t chain_guard = 10'000'000);

/// Independent oracle for g_recursive: (-1)^{c(M)-1} sum lambda_P g_path(P).
Poly g_via_schubert(const Matroid& m);

Poly compose_direct_sum(const Poly& a, const Poly& b);
Poly compose_two_sum(const Poly& a, const Poly& b);

struct ClosedForm {
    Poly g;
    bool conjectural = false;  // complete-graph recursion beyond its tested range
};

/// Closed forms: wheel r; uniform n,r ("n,r"); complete n; prism n; moebius n;
/// zigzag n; k3n n; k111n n.
ClosedForm closed_form(const std::string& name, const std::string& param);

Poly g_wheel(int r);
Poly g_uniform(int n, int r);
Poly g_complete(int n);  // recursion from K3, K4
Poly g_prism(int n);
Poly g_moebius(int n);
Poly g_zigzag(int n);
Poly g_k3n(int n);
Poly g_k111n(int n);

}  // namespace gspeyer
