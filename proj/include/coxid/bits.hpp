#pragma once

#include <bit>
#include <cstdint>

namespace coxid {

// Subsets of [n] are bit masks; element e (1-based) is bit e-1.
using Mask = std::uint32_t;

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest_element(Mask m) { return std::countr_zero(m) + 1; }
constexpr int highest_element(Mask m) { return 32 - std::countl_zero(m); }

// Elements strictly greater than e.
constexpr Mask above(int e) { return ~full_mask(e); }

// Elements strictly between a and b (a < b).
constexpr Mask between(int a, int b) { return full_mask(b - 1) & ~full_mask(a); }

template <class F>
constexpr void for_each_element(Mask m, F&& f) {
    while (m) {
        f(lowest_element(m));
        m &= m - 1;
    }
}

// Number of pairs (u, b) with u in `earlier`, b in `later`, u > b.
constexpr int cross_inversions(Mask earlier, Mask later) {
    int count = 0;
    for_each_element(later, [&](int b) { count += popcount(earlier & above(b)); });
    return count;
}

constexpr long long binom2(long long c) { return c * (c - 1) / 2; }

constexpr int parity_sign(long long exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace coxid
