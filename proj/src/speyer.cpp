#include "gspeyer/speyer.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gspeyer {

namespace {
const Int kZero = 0;
}

const Int& NExpansion::coeff(size_t i) const { return i < n.size() ? n[i] : kZero; }

NExpansion to_n_expansion(const Poly& g) {
    NExpansion v;
    if (g.is_zero()) return v;
    if (g[0] != 0) throw std::invalid_argument("to_n_expansion: constant term must vanish");
    // g = t * h(t); N_i are the coefficients of h(t-1)
    Poly h = g.divide_by_power(1);
    Poly shifted = h.shift_argument(-1);
    v.n = shifted.coeffs();
    return v;
}

Poly from_n_expansion(const NExpansion& v) {
    Poly h(std::vector<Int>(v.n));
    return h.shift_argument(1) * Poly::monomial(1);
}

Int fp2(const Poly& g) { return to_n_expansion(g).coeff(2); }

Poly q1(int r, int l) {
    std::vector<Int> c;
    int top = std::min(r, l);
    for (int i = 0; i <= top; ++i) c.push_back(binomial(r, i) * binomial(l, i));
    return Poly(std::move(c));
}

Poly q2(int r, int l) {
    int top = std::min(r + 1, l);
    std::vector<Int> c(top + 1, 0);
    for (int i = 1; i <= top; ++i) c[i] = binomial(r, i - 1) * binomial(l, i);
    return Poly(std::move(c));
}

namespace {

// Bottom-up evaluation of the truncated polynomials gbar(A, k) over the
// lattice: gbar(B, k) = -mu(0,B) Q1_{k-1, l(B)-1}
//   + sum_{0 < A < B} -mu(A,B) [ k <= rk(A) ? gbar(A,k)
//                                           : gbar(A, rk(A)) Q1_{k-rk(A), l(B)-l(A)-1} ]
//   + sum_{0 < A < B} sum_{k'=1}^{min(k-1, rk(A)-1)} -mu(A,B) gbar(A,k') Q2_{k-1-k', l(B)-l(A)}
// The inner double sum is grouped by (k', l(A)) before multiplying by Q2.
struct RecursiveEngine {
    const CyclicFlatLattice& lat;
    const MoebiusTable& mu;
    // table[i][k-1] = gbar(element i, k) for 1 <= k <= rank(i)
    std::vector<std::vector<Poly>> table;

    RecursiveEngine(const CyclicFlatLattice& l, const MoebiusTable& m) : lat(l), mu(m) {}

    void run() {
        int n = lat.size();
        table.resize(n);
        // elements ascend by size, so below[b] is already evaluated
        for (int b = 0; b < n; ++b) {
            if (b == lat.bottom) continue;
            int rb = lat.rank[b], lb = lat.corank[b];
            table[b].resize(rb);
            // direct_sum[k-1]: sum of w_A gbar(A,k) over A with rk(A) >= k
            // mid[(rk A, l A)]: sum of w_A gbar(A, rk A)   (the k > rk(A) branch)
            // grp[k'-1][l A]:  sum of w_A gbar(A,k') over A with rk(A) > k'
            std::vector<Poly> direct_sum(rb);
            std::map<std::pair<int, int>, Poly> mid;
            std::vector<std::map<int, Poly>> grp(rb);
            for (int a : lat.below[b]) {
                if (a == lat.bottom) continue;
                Int w = -mu.mu(a, b);
                if (w == 0) continue;
                int ra = lat.rank[a], la = lat.corank[a];
                for (int k = 1; k <= std::min(rb, ra); ++k)
                    direct_sum[k - 1].add_scaled(table[a][k - 1], w);
                mid[{ra, la}].add_scaled(table[a][ra - 1], w);
                for (int kp = 1; kp <= std::min(rb - 1, ra - 1); ++kp)
                    grp[kp - 1][la].add_scaled(table[a][kp - 1], w);
            }
            Int base_mu = -mu.mu(lat.bottom, b);
            for (int k = 1; k <= rb; ++k) {
                Poly acc = q1(k - 1, lb - 1) * base_mu;
                acc += direct_sum[k - 1];
                for (auto& [key, poly] : mid) {
                    auto [ra, la] = key;
                    if (k > ra) acc += poly * q1(k - ra, lb - la - 1);
                }
                for (int kp = 1; kp <= k - 1; ++kp)
                    for (auto& [la, poly] : grp[kp - 1]) acc += poly * q2(k - 1 - kp, lb - la);
                table[b][k - 1] = std::move(acc);
            }
        }
    }
};

}  // namespace

Poly g_recursive(const Matroid& m) {
    if (m.size() == 0) throw std::invalid_argument("g_recursive: empty matroid");
    if (!m.loops().empty() || !m.coloops().empty()) return {};
    CyclicFlatLattice lat = enumerate_cyclic_flats(m);
    if (lat.size() == 1) return {};  // rank zero
    MoebiusTable mt(lat);
    RecursiveEngine eng(lat, mt);
    eng.run();
    int r = lat.rank[lat.top];
    Poly gbar = eng.table[lat.top][r - 1];
    // g = (-1)^{c-1} t gbar(1+t)
    Poly shifted = gbar.shift_argument(1);
    Poly g = shifted * Poly::monomial(1);
    if (m.components() % 2 == 0) g = -g;
    return g;
}

SchubertDecomposition schubert_decomposition(const Matroid& m, std::uint64_t chain_guard) {
    if (!m.loops().empty() || !m.coloops().empty())
        throw std::invalid_argument("schubert_decomposition: matroid has loops or coloops");
    CyclicFlatLattice lat = enumerate_cyclic_flats(m);
    MoebiusTable mt(lat);
    // DFS over strictly increasing chains bottom = C0 < ... < top,
    // multiplier = prod -mu(C_{i-1}, C_i)
    std::map<LatticePath, Int> agg;
    std::uint64_t chains = 0;
    // supersets per node, from below lists
    int n = lat.size();
    std::vector<std::vector<int>> above(n);
    for (int j = 0; j < n; ++j)
        for (int i : lat.below[j]) above[i].push_back(j);

    std::vector<std::pair<int, int>> chain;  // (rank, corank) trail
    auto dfs = [&](auto&& self, int node, const Int& weight) -> void {
        if (node == lat.top) {
            if (++chains > chain_guard)
                throw std::runtime_error("schubert_decomposition: chain guard exceeded");
            Chain c;
            c.steps = chain;
            if (weight != 0) agg[path_from_chain(c)] += weight;
            return;
        }
        for (int nx : above[node]) {
            chain.push_back({lat.rank[nx], lat.corank[nx]});
            self(self, nx, weight * Int(-mt.mu(node, nx)));
            chain.pop_back();
        }
    };
    dfs(dfs, lat.bottom, 1);
    SchubertDecomposition out;
    for (auto& [p, w] : agg)
        if (w != 0) out.terms.push_back({p, w});
    return out;
}

std::string SchubertDecomposition::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, w] : terms) {
        Int a = w < 0 ? Int(-w) : w;
        if (first)
            os << (w < 0 ? "-" : "");
        else
            os << (w < 0 ? " - " : " + ");
        first = false;
        if (a != 1) os << a.str() << " ";
        os << "Schubert(" << p.length() << ", {";
        auto pos = p.north_positions();
        for (size_t i = 0; i < pos.size(); ++i) {
            if (i) os << ", ";
            os << pos[i];
        }
        os << "})";
    }
    return os.str();
}

Poly g_via_schubert(const Matroid& m) {
    if (!m.loops().empty() || !m.coloops().empty()) return {};
    SchubertDecomposition dec = schubert_decomposition(m);
    Poly g;
    for (auto& [p, w] : dec.terms) g.add_scaled(g_path(p), w);
    if (m.components() % 2 == 0) g = -g;
    return g;
}

Poly compose_direct_sum(const Poly& a, const Poly& b) { return a * b; }

Poly compose_two_sum(const Poly& a, const Poly& b) { return (a * b).divide_by_power(1); }

Poly g_wheel(int r) {
    if (r < 3) throw std::invalid_argument("g_wheel: r >= 3");
    // (1+t)^r - 1 - t - t^2
    Poly p = Poly(std::vector<Int>{1, 1});
    Poly acc = Poly::constant(1);
    for (int i = 0; i < r; ++i) acc = acc * p;
    acc -= Poly(std::vector<Int>{1, 1, 1});
    return acc;
}

Poly g_uniform(int n, int r) {
    if (r < 1 || r >= n) throw std::invalid_argument("g_uniform: 1 <= r < n");
    return q1(r - 1, n - r - 1).shift_argument(1) * Poly::monomial(1);
}

Poly g_complete(int n) {
    if (n < 3) throw std::invalid_argument("g_complete: n >= 3");
    Poly g2 = Poly::monomial(1);                       // K3
    Poly g1 = Poly(std::vector<Int>{0, 2, 2, 1});      // K4
    if (n == 3) return g2;
    if (n == 4) return g1;
    Poly one_plus_t(std::vector<Int>{1, 1});
    for (int k = 5; k <= n; ++k) {
        // (k-2 + t(k-3)) g_{K_{k-1}} + t(1+t) g'_{K_{k-1}} + (1+t)(t-k+3) g_{K_{k-2}}
        Poly a = Poly(std::vector<Int>{k - 2, k - 3}) * g1;
        Poly b = Poly(std::vector<Int>{0, 1, 1}) * g1.derivative();
        Poly c = one_plus_t * Poly(std::vector<Int>{3 - k, 1}) * g2;
        Poly g = a + b + c;
        g2 = std::move(g1);
        g1 = std::move(g);
    }
    return g1;
}

Poly g_prism(int n) {
    if (n < 2) throw std::invalid_argument("g_prism: n >= 2");
    // t (1 + (1+t)^2 + (2^n - n - 3)(1+t)^n)
    Poly one_plus_t(std::vector<Int>{1, 1});
    Poly p = Poly::constant(1) + one_plus_t * one_plus_t;
    Poly pw = Poly::constant(1);
    for (int i = 0; i < n; ++i) pw = pw * one_plus_t;
    p += pw * Int((Int(1) << n) - n - 3);
    return p * Poly::monomial(1);
}

Poly g_moebius(int n) {
    if (n < 2) throw std::invalid_argument("g_moebius: n >= 2");
    Poly one_plus_t(std::vector<Int>{1, 1});
    Poly pw = Poly::constant(1);
    for (int i = 0; i < n; ++i) pw = pw * one_plus_t;
    Poly p = Poly::constant(1) + pw * Int((Int(1) << n) - n - 1);
    return p * Poly::monomial(1);
}

Poly g_zigzag(int n) {
    if (n < 5) throw std::invalid_argument("g_zigzag: n >= 5");
    // t + sum_{i=1+floor(n/2)}^{n-2} (n/i) C(i, n-i) t (1+t)^i  [+ t(1+t)^2 for even n]
    Poly one_plus_t(std::vector<Int>{1, 1});
    Poly acc = Poly::constant(1);
    for (int i = n / 2 + 1; i <= n - 2; ++i) {
        Int coeff = Int(n) * binomial(i, n - i);
        if (coeff % i != 0) throw std::logic_error("g_zigzag: non-integer coefficient");
        coeff /= i;
        Poly pw = Poly::constant(coeff);
        for (int j = 0; j < i; ++j) pw = pw * one_plus_t;
        acc += pw;
    }
    if (n % 2 == 0) acc += one_plus_t * one_plus_t;
    return acc * Poly::monomial(1);
}

namespace {
Poly k3n_common(int n) {
    // t (n t^2 + (n+1) t + 2) (2+t)^{n-1}
    Poly base(std::vector<Int>{2, n + 1, n});
    Poly two_plus_t(std::vector<Int>{2, 1});
    for (int i = 0; i < n - 1; ++i) base = base * two_plus_t;
    return base * Poly::monomial(1);
}
}  // namespace

Poly g_k3n(int n) {
    if (n < 3) throw std::invalid_argument("g_k3n: n >= 3");
    Poly one_plus_t(std::vector<Int>{1, 1});
    Poly pw = Poly::constant(3);
    for (int i = 0; i < n + 1; ++i) pw = pw * one_plus_t;
    return k3n_common(n) - pw * Poly::monomial(1);
}

Poly g_k111n(int n) {
    if (n < 2) throw std::invalid_argument("g_k111n: n >= 2");
    return k3n_common(n);
}

ClosedForm closed_form(const std::string& name, const std::string& param) {
    auto as_int = [](const std::string& s) {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad integer parameter: " + s);
        return v;
    };
    ClosedForm out;
    if (name == "wheel") {
        out.g = g_wheel(as_int(param));
    } else if (name == "uniform") {
        auto comma = param.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("uniform parameter syntax: n,r");
        out.g = g_uniform(as_int(param.substr(0, comma)), as_int(param.substr(comma + 1)));
    } else if (name == "complete") {
        int n = as_int(param);
        out.g = g_complete(n);
        out.conjectural = n > 40;  // recursion unverified beyond this range
    } else if (name == "prism") {
        out.g = g_prism(as_int(param));
        out.conjectural = true;
    } else if (name == "moebius") {
        out.g = g_moebius(as_int(param));
        out.conjectural = true;
    } else if (name == "zigzag") {
        out.g = g_zigzag(as_int(param));
        out.conjectural = true;
    } else if (name == "k3n") {
        out.g = g_k3n(as_int(param));
        out.conjectural = true;
    } else if (name == "k111n") {
        out.g = g_k111n(as_int(param));
        out.conjectural = true;
    } else {
        throw std::invalid_argument("no closed form for family: " + name);
    }
    return out;
}

}  // namespace gspeyer
