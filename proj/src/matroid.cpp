#include "gspeyer/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gspeyer {

struct Matroid::Impl {
    Kind kind;
    int n = 0;
    // graphic
    Graph graph;
    // uniform
    int uniform_rank = 0;
    // binary
    int rows = 0;
    std::vector<std::uint64_t> columns;
    // dual
    std::shared_ptr<const Impl> base;
    int base_full_rank = 0;

    int rank(EdgeSubset a) const {
        switch (kind) {
            case Kind::Graphic:
                return graphic_rank(graph, a);
            case Kind::Uniform:
                return std::min(a.count(), uniform_rank);
            case Kind::Binary: {
                // Gaussian elimination over GF(2) on the selected columns
                std::uint64_t basis[64] = {};
                int r = 0;
                for_each_bit(a, [&](int j) {
                    std::uint64_t col = columns[j];
                    for (int b = 0; b < rows && col; ++b)
                        if ((col >> b) & 1) {
                            if (basis[b])
                                col ^= basis[b];
                            else {
                                basis[b] = col;
                                ++r;
                                col = 0;
                            }
                        }
                });
                return r;
            }
            case Kind::Dual: {
                EdgeSubset complement = EdgeSubset::full(n) - a;
                return a.count() - base_full_rank + base->rank(complement);
            }
        }
        return 0;
    }
};

Matroid Matroid::graphic(Graph g) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Graphic;
    impl->n = g.edge_count();
    impl->graph = std::move(g);
    return Matroid(std::move(impl));
}

Matroid Matroid::uniform(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw std::invalid_argument("uniform: need 0 <= r <= n");
    check_edge_capacity(n);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Uniform;
    impl->n = n;
    impl->uniform_rank = r;
    return Matroid(std::move(impl));
}

Matroid Matroid::binary(int rows, std::vector<std::uint64_t> columns) {
    if (rows < 0 || rows > 64) throw std::invalid_argument("binary: rows in 0..64");
    check_edge_capacity(static_cast<int>(columns.size()));
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Binary;
    impl->n = static_cast<int>(columns.size());
    impl->rows = rows;
    impl->columns = std::move(columns);
    return Matroid(std::move(impl));
}

Matroid Matroid::dual() const {
    if (impl_->kind == Kind::Dual) return Matroid(impl_->base);  // involution
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Dual;
    impl->n = impl_->n;
    impl->base = impl_;
    impl->base_full_rank = impl_->rank(EdgeSubset::full(impl_->n));
    return Matroid(std::move(impl));
}

int Matroid::size() const { return impl_->n; }
int Matroid::rank(EdgeSubset a) const { return impl_->rank(a); }
Matroid::Kind Matroid::kind() const { return impl_->kind; }

const Graph* Matroid::host_graph() const {
    return impl_->kind == Kind::Graphic ? &impl_->graph : nullptr;
}

EdgeSubset Matroid::closure(EdgeSubset a) const {
    int ra = rank(a);
    EdgeSubset cl = a;
    for (int e = 0; e < size(); ++e) {
        if (a.test(e)) continue;
        EdgeSubset b = a;
        b.set(e);
        if (rank(b) == ra) cl.set(e);
    }
    return cl;
}

EdgeSubset Matroid::cyclic_core(EdgeSubset a) const {
    // iteratively drop elements not on a circuit within the current set
    EdgeSubset cur = a;
    bool changed = true;
    while (changed) {
        changed = false;
        int r = rank(cur);
        EdgeSubset next = cur;
        for_each_bit(cur, [&](int e) {
            EdgeSubset without = cur;
            without.reset(e);
            if (rank(without) < r) next.reset(e);
        });
        if (next != cur) {
            cur = next;
            changed = true;
        }
    }
    return cur;
}

EdgeSubset Matroid::loops() const {
    EdgeSubset out;
    for (int e = 0; e < size(); ++e)
        if (rank(EdgeSubset::single(e)) == 0) out.set(e);
    return out;
}

EdgeSubset Matroid::coloops() const {
    EdgeSubset out;
    EdgeSubset full = EdgeSubset::full(size());
    int r = rank(full);
    for (int e = 0; e < size(); ++e) {
        EdgeSubset without = full;
        without.reset(e);
        if (rank(without) == r - 1) out.set(e);
    }
    return out;
}

EdgeSubset Matroid::basis(EdgeSubset a) const {
    EdgeSubset b;
    int r = 0;
    for_each_bit(a, [&](int e) {
        EdgeSubset c = b;
        c.set(e);
        if (rank(c) > r) {
            b = c;
            ++r;
        }
    });
    return b;
}

int Matroid::components(EdgeSubset a) const {
    // Union the elements of each fundamental circuit w.r.t. one basis of M|A.
    int n = size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    EdgeSubset b = basis(a);
    int r = b.count();
    int comps = a.count();
    for_each_bit(a - b, [&](int f) {
        // fundamental circuit of f: f plus basis elements e with b - e + f a basis
        EdgeSubset bf = b;
        bf.set(f);
        int anchor = f;
        for_each_bit(b, [&](int e) {
            EdgeSubset c = bf;
            c.reset(e);
            if (rank(c) == r) {
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

int Matroid::components() const { return components(EdgeSubset::full(size())); }

NamedMatroid named_matroid(const std::string& identifier) {
    if (identifier == "F7") {
        // all nonzero vectors of GF(2)^3 as columns
        std::vector<std::uint64_t> cols;
        for (std::uint64_t c = 1; c <= 7; ++c) cols.push_back(c);
        return {"F7", Matroid::binary(3, std::move(cols))};
    }
    if (identifier == "R10") {
        // [I5 | B] with column j of B having ones in rows j-1, j, j+1 mod 5
        std::vector<std::uint64_t> cols;
        for (int i = 0; i < 5; ++i) cols.push_back(std::uint64_t{1} << i);
        for (int j = 0; j < 5; ++j) {
            std::uint64_t c = 0;
            c |= std::uint64_t{1} << ((j + 4) % 5);
            c |= std::uint64_t{1} << j;
            c |= std::uint64_t{1} << ((j + 1) % 5);
            cols.push_back(c);
        }
        return {"R10", Matroid::binary(5, std::move(cols))};
    }
    throw std::invalid_argument("unknown named matroid: " + identifier);
}

}  // namespace gspeyer
