#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coxid/bits.hpp"
#include "coxid/caps.hpp"
#include "coxid/composition.hpp"
#include "coxid/permutation.hpp"

namespace coxid {

/// An ordered set partition (C_1, ..., C_k) of [n]; blocks are bit masks.
///
/// Refinement order: sigma <= sigma' when sigma' arises from sigma by merging
/// adjacent blocks. Read as faces of the Coxeter complex, merging goes toward
/// the empty face ([n]) and the all-singleton partitions are the facets.
class OrderedPartition {
public:
    OrderedPartition() = default;

    /// Throws InvalidArgument unless the blocks are nonempty, disjoint and cover [n].
    OrderedPartition(int n, std::span<const Mask> blocks);
    OrderedPartition(int n, std::initializer_list<std::initializer_list<int>> blocks);

    static OrderedPartition whole(int n);                            // ([n])
    static OrderedPartition singletons(const Permutation& tau);      // ({tau_1}, ..., {tau_n})

    int ground_size() const { return n_; }
    int size() const { return k_; }  // |sigma|
    Mask block(int j) const { return blocks_[j - 1]; }  // 1-based
    std::span<const std::uint16_t> block_masks() const { return {blocks_.data(), k_}; }
    bool all_singletons() const { return k_ == n_; }

    /// Facet read as a permutation; requires all_singletons().
    Permutation as_permutation() const;

    /// Cut positions (prefix lengths between blocks) as a mask over [n-1].
    Mask cut_positions() const;

    /// "1-4-23": blocks' elements ascending, blocks joined by '-'.
    std::string label() const;
    std::vector<std::vector<int>> block_lists() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
    friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

private:
    friend struct OrderedPartitionBuilder;

    std::array<std::uint16_t, kMaxGroundSet> blocks_{};
    std::uint8_t n_ = 0;
    std::uint8_t k_ = 0;
};

struct OrderedPartitionHash {
    std::size_t operator()(const OrderedPartition& s) const noexcept;
};

// Unchecked construction for hot enumeration paths.
struct OrderedPartitionBuilder {
    static OrderedPartition from_masks(int n, std::span<const Mask> blocks) {
        OrderedPartition s;
        s.n_ = static_cast<std::uint8_t>(n);
        s.k_ = static_cast<std::uint8_t>(blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) s.blocks_[i] = static_cast<std::uint16_t>(blocks[i]);
        return s;
    }
};

/// Face of the facet `tau` with the given cut positions (bit t-1 = cut after position t).
OrderedPartition face_with_cuts(const Permutation& tau, Mask cuts);

/// Block sizes (|C_1|, ..., |C_k|).
Composition op_type(const OrderedPartition& sigma);

/// The k-1 partitions obtained by merging one pair of adjacent blocks.
std::vector<OrderedPartition> merge_covers(const OrderedPartition& sigma);

/// True iff `coarse` is obtained from `fine` by merging adjacent blocks (reflexive).
bool refines(const OrderedPartition& fine, const OrderedPartition& coarse);

/// Blocks sorted ascending and concatenated.
Permutation f_map(const OrderedPartition& sigma);

/// Blocks sorted descending and concatenated.
Permutation g_map(const OrderedPartition& sigma);

/// Repeatedly merges adjacent blocks with max(C_i) < min(C_{i+1}).
OrderedPartition r_map(const OrderedPartition& sigma);

/// Blocks are the maximal ascending runs of tau.
OrderedPartition R_of_perm(const Permutation& tau);

/// tau(sigma): tau applied elementwise to every block, block order kept.
OrderedPartition relabel(const Permutation& tau, const OrderedPartition& sigma);

/// Ordered Bell (Fubini) number by the recurrence a(n) = sum_k C(n,k) a(n-k).
unsigned long long ordered_bell(int n);

namespace detail {

// Nonempty subsets of `pool`, in lexicographic order of their sorted element lists:
// {1}, {1,2}, {1,2,3}, {1,3}, {2}, {2,3}, {3}.
template <class F>
void for_each_subset_lex(Mask pool, Mask prefix, int last, F& visit) {
    Mask rest = pool & above(last);
    while (rest) {
        const int e = lowest_element(rest);
        rest &= rest - 1;
        const Mask grown = prefix | element_bit(e);
        visit(grown);
        for_each_subset_lex(pool, grown, e, visit);
    }
}

template <class F>
void ordered_partitions_with_k(int n, int k, Mask remaining, std::vector<Mask>& blocks, F& visit) {
    const int placed = static_cast<int>(blocks.size());
    if (placed == k - 1) {
        blocks.push_back(remaining);
        visit(OrderedPartitionBuilder::from_masks(n, blocks));
        blocks.pop_back();
        return;
    }
    const int still_needed = k - placed - 1;
    auto choose = [&](Mask b) {
        if (popcount(remaining & ~b) < still_needed) return;
        blocks.push_back(b);
        ordered_partitions_with_k(n, k, remaining & ~b, blocks, visit);
        blocks.pop_back();
    };
    for_each_subset_lex(remaining, 0, 0, choose);
}

}  // namespace detail

/// Visits the ordered partitions of [n] with exactly k blocks, blocks compared
/// lexicographically by their sorted element lists.
template <class F>
void for_each_ordered_partition_with_blocks(int n, int k, F&& visit) {
    std::vector<Mask> blocks;
    blocks.reserve(static_cast<std::size_t>(k));
    detail::ordered_partitions_with_k(n, k, full_mask(n), blocks, visit);
}

/// Visits every ordered partition of [n] once: by number of blocks, then blocks
/// lexicographically. Throws CapExceeded beyond caps.ordered_partitions.
template <class F>
void for_each_ordered_partition(int n, const Caps& caps, F&& visit) {
    if (n < 1) throw InvalidArgument("ground set must be nonempty");
    require_cap(n, caps.ordered_partitions, "ordered partition enumeration");
    for (int k = 1; k <= n; ++k) for_each_ordered_partition_with_blocks(n, k, visit);
}

std::vector<OrderedPartition> enumerate_ordered_partitions(int n, const Caps& caps = {});

}  // namespace coxid
