#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gspeyer/matroid.hpp"

namespace gspeyer {

/// Lattice of cyclic flats: elements sorted by (size, mask), Hasse covers,
/// and the full strict-containment structure (below lists).
struct CyclicFlatLattice {
    std::vector<EdgeSubset> elements;
    std::vector<int> rank;
    std::vector<int> corank;
    int bottom = -1;  // set of loops
    int top = -1;     // complement of the coloops
    std::vector<std::vector<std::int32_t>> covers_up;  // Hasse diagram, upward
    std::vector<std::vector<std::int32_t>> below;      // strict subsets, ascending index

    int size() const { return static_cast<int>(elements.size()); }
    /// Index of a mask in elements, or -1.
    int index_of(EdgeSubset s) const;
};

/// Enumerate the lattice of cyclic flats. Graphic matroids grow the lattice
/// bottom-up through closures of chordless circuits; other realizations use
/// the subset brute force (ground sets up to 22 elements).
CyclicFlatLattice enumerate_cyclic_flats(const Matroid& m);

/// Test oracle: all subsets A with cl(A) = A and cyc(A) = A.
std::vector<EdgeSubset> cyclic_flats_bruteforce(const Matroid& m);

/// Circuit generators of a graphic matroid: one representative digon per
/// parallel class and all chordless (induced) cycles, as edge masks.
/// Self-loops are excluded (they live in every flat already).
std::vector<EdgeSubset> chordless_circuits(const Graph& g);

/// Moebius function on all comparable pairs, rows aligned with lattice.below.
class MoebiusTable {
  public:
    explicit MoebiusTable(const CyclicFlatLattice& lattice);
    /// mu(elements[a], elements[b]) for comparable a <= b.
    std::int64_t mu(int a, int b) const;
    std::int64_t mu_bottom_top() const;

  private:
    const CyclicFlatLattice* lat_;
    std::vector<std::vector<std::int64_t>> rows_;
};

MoebiusTable moebius(const CyclicFlatLattice& lattice);

/// Reduced Euler characteristic of the order complex of L minus bottom/top;
/// must equal mu(bottom, top). Throws if the chain count exceeds the guard.
std::int64_t euler_characteristic_oracle(const CyclicFlatLattice& lattice,
                                         std::uint64_t chain_guard = 10'000'000);

struct LatticeStats {
    std::uint64_t element_count = 0;
    std::uint64_t hasse_edge_count = 0;
    std::uint64_t comparable_pair_count = 0;  // strict pairs A < B
};

LatticeStats lattice_stats(const CyclicFlatLattice& lattice);

/// Hasse diagram in DOT format (debugging aid).
std::string dot_dump(const CyclicFlatLattice& lattice);

}  // namespace gspeyer
