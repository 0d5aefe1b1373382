#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace gspeyer {

inline constexpr int kEdgeCapacity = 64;

/// Subset of edge indices as a machine-word bit mask (capacity 64).
struct EdgeSubset {
    std::uint64_t bits = 0;

    constexpr EdgeSubset() = default;
    constexpr explicit EdgeSubset(std::uint64_t b) : bits(b) {}

    static constexpr EdgeSubset full(int n) {
        return EdgeSubset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr EdgeSubset single(int i) { return EdgeSubset(std::uint64_t{1} << i); }

    constexpr bool test(int i) const { return (bits >> i) & 1u; }
    constexpr void set(int i) { bits |= std::uint64_t{1} << i; }
    constexpr void reset(int i) { bits &= ~(std::uint64_t{1} << i); }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }

    constexpr bool subset_of(EdgeSubset o) const { return (bits & ~o.bits) == 0; }

    constexpr EdgeSubset operator|(EdgeSubset o) const { return EdgeSubset(bits | o.bits); }
    constexpr EdgeSubset operator&(EdgeSubset o) const { return EdgeSubset(bits & o.bits); }
    constexpr EdgeSubset operator-(EdgeSubset o) const { return EdgeSubset(bits & ~o.bits); }
    constexpr bool operator==(const EdgeSubset&) const = default;
    constexpr auto operator<=>(const EdgeSubset&) const = default;
};

// for_each_bit(s, f): calls f(i) for every set bit i, ascending.
template <typename F>
inline void for_each_bit(EdgeSubset s, F&& f) {
    std::uint64_t b = s.bits;
    while (b) {
        int i = std::countr_zero(b);
        f(i);
        b &= b - 1;
    }
}

inline void check_edge_capacity(int edge_count, int cap = kEdgeCapacity) {
    if (edge_count > cap || edge_count > kEdgeCapacity)
        throw std::invalid_argument("graph has " + std::to_string(edge_count) +
                                    " edges, exceeding the subset capacity of " +
                                    std::to_string(cap < kEdgeCapacity ? cap : kEdgeCapacity));
}

}  // namespace gspeyer
