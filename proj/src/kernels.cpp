// Face-side and matching-side sums. Each has an OpenMP kernel and a serial
// reference that follows the definitions literally; tests compare the two.

#include <vector>

#include "coxid/bits.hpp"
#include "coxid/complex.hpp"
#include "coxid/error.hpp"
#include "coxid/identity.hpp"

namespace coxid {

namespace {

enum class BlockReading { Descending, Ascending, Ignored };

// Depth-first search over ordered partitions with every prefix sum positive.
// `parity` accumulates |sigma| plus the inversions of the block reading.
struct FaceWalker {
    const std::vector<long long>& sums;
    Mask full;
    BlockReading reading;

    int step_parity(Mask used, Mask block) const {
        int p = 1;  // one more block
        if (reading != BlockReading::Ignored) {
            p += cross_inversions(used, block);
            if (reading == BlockReading::Descending) p += static_cast<int>(binom2(popcount(block)));
        }
        return p & 1;
    }

    long long walk(Mask used, int parity) const {
        if (used == full) return parity ? -1 : 1;
        const Mask rest = full & ~used;
        long long total = 0;
        for (Mask b = rest; b; b = (b - 1) & rest) {
            if (sums[used | b] <= 0) continue;
            total += walk(used | b, parity ^ step_parity(used, b));
        }
        return total;
    }

    long long walk_parallel() const {
        const Mask rest = full;
        std::vector<Mask> firsts;
        for (Mask b = rest; b; b = (b - 1) & rest)
            if (sums[b] > 0) firsts.push_back(b);
        long long total = 0;
        const auto count = static_cast<long>(firsts.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
        for (long idx = 0; idx < count; ++idx) {
            const Mask b = firsts[static_cast<std::size_t>(idx)];
            total += walk(b, step_parity(0, b));
        }
        return total;
    }
};

long long face_sum(const WeightVector& lambda, BlockReading reading, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("face sums need a nonempty weight vector");
    require_cap(n, caps.ordered_partitions, "face enumeration");
    const auto sums = subset_sum_table(lambda);
    if (sums.back() <= 0) return 0;
    return FaceWalker{sums, full_mask(n), reading}.walk_parallel();
}

// Matchings built by pairing the smallest unmatched vertex; pairing a with b
// crosses every earlier edge whose right end lies strictly between them.
struct MatchingWalker {
    const WeightVector& lambda;
    int n;

    long long walk(Mask unmatched, Mask matched, bool isolated_used, int parity) const {
        if (unmatched == 0) return parity ? -1 : 1;
        const int a = lowest_element(unmatched);
        const Mask rest = unmatched & ~element_bit(a);
        long long total = 0;
        if ((n & 1) && !isolated_used && c1_scaled(lambda.scaled(a))) {
            total += walk(rest, matched, true, parity ^ ((a - 1) & 1));
        }
        for_each_element(rest, [&](int b) {
            const int c = c2_scaled(lambda.scaled(a), lambda.scaled(b));
            if (c == 0) return;
            const int cross = popcount(matched & between(a, b)) & 1;
            total += c * walk(rest & ~element_bit(b), matched | element_bit(a) | element_bit(b), isolated_used,
                              parity ^ cross);
        });
        return total;
    }
};

}  // namespace

long long s_direct(const WeightVector& lambda, const Caps& caps) {
    return face_sum(lambda, BlockReading::Descending, caps);
}

long long euler_sum_streaming(const WeightVector& lambda, const Caps& caps) {
    return face_sum(lambda, BlockReading::Ignored, caps);
}

long long s_via_reverse(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    return parity_sign(binom2(n)) * face_sum(lambda.reversed(), BlockReading::Ascending, caps);
}

long long s_direct_reference(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("face sums need a nonempty weight vector");
    long long total = 0;
    for_each_ordered_partition(n, caps, [&](const OrderedPartition& sigma) {
        if (in_P(lambda, sigma)) total += parity_sign(sigma.size()) * sign(g_map(sigma));
    });
    return total;
}

long long t_direct(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("T needs a nonempty weight vector");
    require_cap(n, caps.matchings, "maximal matching enumeration");
    const MatchingWalker walker{lambda, n};
    const Mask rest = full_mask(n) & ~element_bit(1);

    // Shard 0 isolates vertex 1 (odd n only); shard b pairs 1 with b.
    long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
    for (int b = 0; b <= n; ++b) {
        if (b == 0) {
            if ((n & 1) && c1_scaled(lambda.scaled(1))) total += walker.walk(rest, 0, true, 0);
        } else if (b >= 2) {
            const int c = c2_scaled(lambda.scaled(1), lambda.scaled(b));
            if (c != 0) total += c * walker.walk(rest & ~element_bit(b), element_bit(1) | element_bit(b), false, 0);
        }
    }
    return total;
}

long long t_direct_reference(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("T needs a nonempty weight vector");
    long long total = 0;
    for_each_maximal_matching(n, caps, [&](const Matching& p) {
        total += matching_sign(p) * c_of_matching(p, lambda);
    });
    return total;
}

}  // namespace coxid
