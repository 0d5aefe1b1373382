#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gspeyer/graph.hpp"
#include "gspeyer/subset.hpp"

namespace gspeyer {

/// Rank-oracle matroid with graphic, uniform, binary (GF(2)) and dual
/// realizations. Immutable value type; cheap to copy.
class Matroid {
  public:
    enum class Kind { Graphic, Uniform, Binary, Dual };

    static Matroid graphic(Graph g);
    static Matroid uniform(int n, int r);
    /// columns[j] is the bit mask of rows with a 1 in column j.
    static Matroid binary(int rows, std::vector<std::uint64_t> columns);
    Matroid dual() const;

    int size() const;
    int rank(EdgeSubset a) const;
    int rank() const { return rank(EdgeSubset::full(size())); }
    int corank(EdgeSubset a) const { return a.count() - rank(a); }

    /// cl(A) = { e : rk(A + e) = rk(A) }
    EdgeSubset closure(EdgeSubset a) const;
    /// cyc(A) = largest subset of A in which every element lies on a circuit.
    EdgeSubset cyclic_core(EdgeSubset a) const;

    EdgeSubset loops() const;
    EdgeSubset coloops() const;

    /// Number of connected components c(M): loops and coloops are singletons,
    /// other elements are glued along fundamental circuits of one basis.
    int components() const;
    /// Same, for the restriction M|A.
    int components(EdgeSubset a) const;

    /// Any basis of M|A (greedy over the rank oracle).
    EdgeSubset basis(EdgeSubset a) const;

    Kind kind() const;
    /// Host graph of a graphic matroid, else nullptr.
    const Graph* host_graph() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

struct NamedMatroid {
    std::string id;
    Matroid matroid;
};

/// identifier in {"F7", "R10"}; uniform matroids go through Matroid::uniform.
NamedMatroid named_matroid(const std::string& identifier);

}  // namespace gspeyer
