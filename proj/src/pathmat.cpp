#include "gspeyer/pathmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace gspeyer {

LatticePath::LatticePath(std::vector<bool> north) : north_(std::move(north)) {
    r_ = static_cast<int>(std::count(north_.begin(), north_.end(), true));
}

LatticePath LatticePath::parse(const std::string& word) {
    std::vector<bool> north;
    north.reserve(word.size());
    for (char c : word) {
        if (c == 'N' || c == 'n' || c == 'U' || c == 'u')
            north.push_back(true);
        else if (c == 'E' || c == 'e' || c == 'R' || c == 'r')
            north.push_back(false);
        else
            throw std::invalid_argument("lattice path: letters must be N/E or U/R");
    }
    return LatticePath(std::move(north));
}

LatticePath LatticePath::from_north_positions(int n, const std::vector<int>& positions) {
    std::vector<bool> north(n, false);
    for (int p : positions) {
        if (p < 1 || p > n) throw std::invalid_argument("north position out of range");
        north[p - 1] = true;
    }
    return LatticePath(std::move(north));
}

std::vector<int> LatticePath::north_positions() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        if (north_[i]) out.push_back(i + 1);
    return out;
}

std::string LatticePath::str(char north, char east) const {
    std::string s;
    for (bool b : north_) s += b ? north : east;
    return s;
}

LatticePath path_from_chain(const Chain& c) {
    std::vector<bool> north;
    int pr = 0, pl = 0;
    for (auto [r, l] : c.steps) {
        if (r <= pr || l <= pl)
            throw std::invalid_argument("path_from_chain: chain must strictly increase "
                                        "in rank and corank");
        north.insert(north.end(), r - pr, true);
        north.insert(north.end(), l - pl, false);
        pr = r;
        pl = l;
    }
    return LatticePath(std::move(north));
}

Poly g_path(const LatticePath& p) {
    int n = p.length(), r = p.rank(), re_total = n - r;
    if (n == 0) return {};
    std::vector<int> posN, posE;
    for (int i = 0; i < n; ++i) (p.north_at(i) ? posN : posE).push_back(i);

    // word(i, j): p with the i rightmost N's and j rightmost E's removed;
    // states indexed by (remaining N count, remaining E count)
    std::vector<std::vector<Poly>> memo(r + 1, std::vector<Poly>(re_total + 1));
    std::vector<std::vector<char>> done(r + 1, std::vector<char>(re_total + 1, 0));

    auto rec = [&](auto&& self, int rn, int re) -> const Poly& {
        Poly& slot = memo[rn][re];
        if (done[rn][re]) return slot;
        done[rn][re] = 1;
        if (rn == 0) return slot;                                  // all-E word (or empty)
        if (re == 0) return slot;                                  // ends with N
        if (posE[0] < posN[0]) return slot;                        // starts with E
        if (posE[re - 1] < posN[rn - 1]) return slot;              // ends with N
        // trailing east count of the current word
        int before = static_cast<int>(
            std::lower_bound(posE.begin(), posE.begin() + re, posN[rn - 1]) - posE.begin());
        int a = re - before;
        if (rn == 1) {  // word is N E^a: rank-one base case
            slot = Poly::monomial(1);
            return slot;
        }
        if (a == 1) {
            slot = self(self, rn - 1, re);
        } else {
            slot = self(self, rn - 1, re);       // Q E^a
            slot += self(self, rn, re - 1);      // Q N E^{a-1}
            Poly t_part = self(self, rn - 1, re - 1) * Poly::monomial(1);
            slot += t_part;                      // t * Q E^{a-1}
        }
        return slot;
    };
    return rec(rec, r, re_total);
}

namespace {

// Staircase profile: maxh[x] = number of N letters before the (x+1)-th E,
// maxh[L] = r; north_start marks the lattice points where p steps north.
struct PathGeometry {
    int L, r;
    std::vector<int> maxh;
    std::vector<std::vector<char>> north_start;  // [x][y]
};

PathGeometry geometry(const LatticePath& p) {
    PathGeometry g;
    g.r = p.rank();
    g.L = p.corank();
    g.maxh.assign(g.L + 1, g.r);
    g.north_start.assign(g.L + 1, std::vector<char>(g.r + 1, 0));
    int x = 0, y = 0;
    for (int i = 0; i < p.length(); ++i) {
        if (p.north_at(i)) {
            g.north_start[x][y] = 1;
            ++y;
        } else {
            g.maxh[x] = y;
            ++x;
        }
    }
    return g;
}

}  // namespace

std::vector<Int> delannoy_counts(const LatticePath& p) {
    if (p.length() > 14) throw std::invalid_argument("delannoy_counts: word longer than 14");
    int r = p.rank();
    std::vector<Int> counts(r + 1, 0);
    if (p.length() == 0 || !p.north_at(0) || p.north_at(p.length() - 1))
        return counts;  // loop or coloop: zero polynomial
    PathGeometry g = geometry(p);
    // dp[x][y][d] = admissible prefixes reaching (x,y) with d diagonal steps
    std::vector dp(g.L + 1, std::vector(g.r + 1, std::vector<Int>(r, 0)));
    dp[1][1][0] = 1;
    for (int x = 1; x <= g.L; ++x) {
        for (int y = 1; y <= g.r; ++y) {
            for (int d = 0; d < r; ++d) {
                const Int& c = dp[x][y][d];
                if (c == 0) continue;
                if (x + 1 <= g.L) dp[x + 1][y][d] += c;  // east
                if (!g.north_start[x][y]) {
                    if (y + 1 <= g.maxh[x]) dp[x][y + 1][d] += c;  // north
                    if (x + 1 <= g.L && y + 1 <= g.maxh[x] && d + 1 < r)
                        dp[x + 1][y + 1][d + 1] += c;  // diagonal
                }
            }
        }
    }
    // a path with d diagonal steps contributes t^{d+1}
    for (int d = 0; d < r; ++d) counts[d + 1] = dp[g.L][g.r][d];
    return counts;
}

std::vector<std::pair<int, int>> admissible_squares(const LatticePath& p) {
    std::vector<std::pair<int, int>> out;
    if (p.length() == 0 || !p.north_at(0) || p.north_at(p.length() - 1)) return out;
    PathGeometry g = geometry(p);
    for (int y = 1; y < g.r; ++y)
        for (int x = 1; x < g.L; ++x)
            if (y + 1 <= g.maxh[x] && !g.north_start[x][y]) out.push_back({y, x});
    std::sort(out.begin(), out.end());
    return out;
}

Int fp_lt(const LatticePath& p, int i, int k) {
    if (i < 0) throw std::invalid_argument("fp_lt: i >= 0");
    if (i == 0) return 1;
    auto sq = admissible_squares(p);
    if (i > 4 || sq.size() > 24)
        throw std::invalid_argument("fp_lt: brute force limited to i <= 4, 24 squares");
    // count i-subsets strictly increasing in both row and column, rows < k
    std::vector<int> pick;
    Int total = 0;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == i) {
            total += 1;
            return;
        }
        for (size_t j = from; j < sq.size(); ++j) {
            auto [row, col] = sq[j];
            if (row >= k) continue;
            if (!pick.empty()) {
                auto [prow, pcol] = sq[pick.back()];
                if (row <= prow || col <= pcol) continue;
            }
            pick.push_back(static_cast<int>(j));
            self(self, j + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace gspeyer
