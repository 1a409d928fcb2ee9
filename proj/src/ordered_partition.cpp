#include "coxid/ordered_partition.hpp"

#include <algorithm>

#include "coxid/error.hpp"

namespace coxid {

OrderedPartition::OrderedPartition(int n, std::span<const Mask> blocks) {
    if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("ground set size must be in [1, 16]");
    if (blocks.empty() || static_cast<int>(blocks.size()) > n) {
        throw InvalidArgument("ordered partition needs between 1 and n blocks");
    }
    Mask seen = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Mask b = blocks[i];
        if (b == 0) throw InvalidArgument("ordered partition has an empty block");
        if (b & ~full_mask(n)) throw InvalidArgument("block element outside [n]");
        if (seen & b) throw InvalidArgument("ordered partition blocks overlap");
        seen |= b;
        blocks_[i] = static_cast<std::uint16_t>(b);
    }
    if (seen != full_mask(n)) throw InvalidArgument("ordered partition blocks do not cover [n]");
    n_ = static_cast<std::uint8_t>(n);
    k_ = static_cast<std::uint8_t>(blocks.size());
}

OrderedPartition::OrderedPartition(int n, std::initializer_list<std::initializer_list<int>> blocks) {
    std::vector<Mask> masks;
    for (const auto& block : blocks) {
        Mask m = 0;
        for (int e : block) {
            if (e < 1 || e > n) throw InvalidArgument("block element outside [n]");
            if (m & element_bit(e)) throw InvalidArgument("repeated element in block");
            m |= element_bit(e);
        }
        masks.push_back(m);
    }
    *this = OrderedPartition(n, masks);
}

OrderedPartition OrderedPartition::whole(int n) {
    const Mask all = full_mask(n);
    return OrderedPartition(n, std::span<const Mask>(&all, 1));
}

OrderedPartition OrderedPartition::singletons(const Permutation& tau) {
    std::vector<Mask> masks;
    for (int i = 1; i <= tau.size(); ++i) masks.push_back(element_bit(tau[i]));
    return OrderedPartitionBuilder::from_masks(tau.size(), masks);
}

Permutation OrderedPartition::as_permutation() const {
    if (!all_singletons()) throw InvalidArgument("ordered partition is not a facet");
    std::vector<int> v;
    for (int j = 0; j < k_; ++j) v.push_back(lowest_element(blocks_[j]));
    return Permutation(v);
}

Mask OrderedPartition::cut_positions() const {
    Mask cuts = 0;
    int prefix = 0;
    for (int j = 0; j + 1 < k_; ++j) {
        prefix += popcount(blocks_[j]);
        cuts |= element_bit(prefix);
    }
    return cuts;
}

std::string OrderedPartition::label() const {
    std::string out;
    for (int j = 0; j < k_; ++j) {
        if (j) out += '-';
        for_each_element(blocks_[j], [&](int e) { out += std::to_string(e); });
    }
    return out;
}

std::vector<std::vector<int>> OrderedPartition::block_lists() const {
    std::vector<std::vector<int>> out(k_);
    for (int j = 0; j < k_; ++j) for_each_element(blocks_[j], [&](int e) { out[j].push_back(e); });
    return out;
}

std::size_t OrderedPartitionHash::operator()(const OrderedPartition& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.ground_size()) * 0x9e3779b97f4a7c15ULL;
    for (auto b : s.block_masks()) h = (h ^ b) * 0x100000001b3ULL + (h >> 29);
    return h;
}

OrderedPartition face_with_cuts(const Permutation& tau, Mask cuts) {
    std::vector<Mask> blocks;
    Mask current = 0;
    for (int i = 1; i <= tau.size(); ++i) {
        current |= element_bit(tau[i]);
        if (i == tau.size() || (cuts & element_bit(i))) {
            blocks.push_back(current);
            current = 0;
        }
    }
    return OrderedPartitionBuilder::from_masks(tau.size(), blocks);
}

Composition op_type(const OrderedPartition& sigma) {
    Composition c;
    for (auto b : sigma.block_masks()) c.parts.push_back(popcount(b));
    return c;
}

std::vector<OrderedPartition> merge_covers(const OrderedPartition& sigma) {
    std::vector<OrderedPartition> out;
    const auto blocks = sigma.block_masks();
    std::vector<Mask> merged;
    for (int i = 0; i + 1 < sigma.size(); ++i) {
        merged.clear();
        for (int j = 0; j < sigma.size(); ++j) {
            if (j == i + 1) continue;
            merged.push_back(j == i ? Mask{blocks[i]} | blocks[i + 1] : Mask{blocks[j]});
        }
        out.push_back(OrderedPartitionBuilder::from_masks(sigma.ground_size(), merged));
    }
    return out;
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
    if (fine.ground_size() != coarse.ground_size()) return false;
    int j = 1;
    for (int i = 1; i <= coarse.size(); ++i) {
        Mask acc = 0;
        while (acc != coarse.block(i)) {
            if (j > fine.size()) return false;
            const Mask b = fine.block(j++);
            if ((b & ~coarse.block(i)) != 0) return false;
            acc |= b;
        }
    }
    return j == fine.size() + 1;
}

namespace {

Permutation read_blocks(const OrderedPartition& sigma, bool descending) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(sigma.ground_size()));
    for (auto b : sigma.block_masks()) {
        const auto start = v.size();
        for_each_element(b, [&](int e) { v.push_back(e); });
        if (descending) std::reverse(v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
    }
    return Permutation(v);
}

}  // namespace

Permutation f_map(const OrderedPartition& sigma) { return read_blocks(sigma, false); }

Permutation g_map(const OrderedPartition& sigma) { return read_blocks(sigma, true); }

OrderedPartition r_map(const OrderedPartition& sigma) {
    std::vector<Mask> blocks(sigma.block_masks().begin(), sigma.block_masks().end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
            if (highest_element(blocks[i]) < lowest_element(blocks[i + 1])) {
                blocks[i] |= blocks[i + 1];
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    return OrderedPartitionBuilder::from_masks(sigma.ground_size(), blocks);
}

OrderedPartition R_of_perm(const Permutation& tau) {
    Mask cuts = 0;
    for (int d : descent_set(tau)) cuts |= element_bit(d);
    return face_with_cuts(tau, cuts);
}

OrderedPartition relabel(const Permutation& tau, const OrderedPartition& sigma) {
    if (tau.size() != sigma.ground_size()) throw InvalidArgument("relabel: size mismatch");
    std::vector<Mask> blocks;
    for (auto b : sigma.block_masks()) blocks.push_back(tau.apply(b));
    return OrderedPartitionBuilder::from_masks(sigma.ground_size(), blocks);
}

unsigned long long ordered_bell(int n) {
    std::vector<unsigned long long> a(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<unsigned long long>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    a[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k) a[m] += c[m][k] * a[m - k];
    return a[n];
}

std::vector<OrderedPartition> enumerate_ordered_partitions(int n, const Caps& caps) {
    std::vector<OrderedPartition> out;
    for_each_ordered_partition(n, caps, [&](const OrderedPartition& s) { out.push_back(s); });
    return out;
}

}  // namespace coxid
