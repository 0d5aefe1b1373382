#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gspeyer/poly.hpp"

namespace gspeyer {

/// Word over {N, E} encoding a lattice path / Schubert matroid.
/// Serialization accepts and emits both N/E and U/R alphabets.
class LatticePath {
  public:
    LatticePath() = default;
    explicit LatticePath(std::vector<bool> north);  // true = N
    /// Parse "NNENEE" or "UURURR".
    static LatticePath parse(const std::string& word);
    /// From north-step positions (1-based) in a word of total length n.
    static LatticePath from_north_positions(int n, const std::vector<int>& positions);

    int length() const { return static_cast<int>(north_.size()); }
    int rank() const { return r_; }                    // number of N letters
    int corank() const { return length() - r_; }       // number of E letters
    bool north_at(int i) const { return north_[i]; }   // 0-based
    std::vector<int> north_positions() const;          // 1-based, ascending
    std::string str(char north = 'U', char east = 'R') const;

    bool operator==(const LatticePath&) const = default;
    /// Order by (length, north-position set), the decomposition print order.
    bool operator<(const LatticePath& o) const {
        if (length() != o.length()) return length() < o.length();
        return north_positions() < o.north_positions();
    }

  private:
    std::vector<bool> north_;
    int r_ = 0;
};

/// Chain of cyclic flats as (rank, corank) pairs, C0 = empty implicit.
struct Chain {
    std::vector<std::pair<int, int>> steps;  // (rank, corank), strictly increasing
};

/// Path of the Schubert matroid of a chain: N^{r1} E^{l1} N^{r2-r1} E^{l2-l1} ...
LatticePath path_from_chain(const Chain& c);

/// Speyer polynomial of the lattice path matroid, by the three-way recursion
/// memoized on the number of right-removed N's and E's.
Poly g_path(const LatticePath& p);

/// Brute-force Delannoy oracle: counts admissible paths from (1,1) to
/// (n-r, r) by number of diagonal steps; index k holds the t^k coefficient.
/// Guarded to words of length <= 14.
std::vector<Int> delannoy_counts(const LatticePath& p);

/// Admissible squares for diagonal steps, returned as (row, column) pairs,
/// sorted. A square is excluded below row 1 and immediately right of a north
/// step of p.
std::vector<std::pair<int, int>> admissible_squares(const LatticePath& p);

/// N_i^{<k}: strictly-increasing-in-both-coordinates i-tuples of admissible
/// squares with all rows < k. Brute force, guarded to i <= 4 and <= 24 squares.
Int fp_lt(const LatticePath& p, int i, int k);

}  // namespace gspeyer
