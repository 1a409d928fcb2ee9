#include "coxid/cube_poset.hpp"

#include <algorithm>

#include "coxid/complex.hpp"
#include "coxid/error.hpp"

namespace coxid {

CubePoset::CubePoset(WeightVector lambda) : lambda_(std::move(lambda)) {
    const int n = lambda_.size();
    if (n < 1) throw InvalidArgument("cube poset needs a nonempty ground set");
    const auto sums = subset_sum_table(lambda_);
    member_.assign(sums.size(), false);
    for (Mask s = 0; s < sums.size(); ++s) {
        if (s == 0 || sums[s] > 0) {
            member_[s] = true;
            elements_.push_back(s);
        }
    }
    std::stable_sort(elements_.begin(), elements_.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
}

std::vector<CubePoset::Cover> CubePoset::covers() const {
    std::vector<Cover> out;
    const Mask all = full_mask(ground_size());
    for (Mask t : elements_) {
        for_each_element(all & ~t, [&](int a) {
            if (contains(t | element_bit(a))) out.push_back({t, t | element_bit(a), a});
        });
    }
    return out;
}

bool CubePoset::graded_by_cardinality() const {
    for (Mask s : elements_) {
        // Proper subsets T of S that are members.
        for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
            if (contains(t) && popcount(s & ~t) >= 2) {
                bool step = false;
                for_each_element(s & ~t, [&](int a) { step = step || contains(t | element_bit(a)); });
                if (!step) return false;
            }
            if (t == 0) break;
        }
    }
    return true;
}

CubePoset build_cube_poset(const WeightVector& lambda) { return CubePoset(lambda); }

namespace {

struct IntervalScan {
    const CubePoset& poset;
    Mask top;
    std::vector<long long> word;
    std::vector<long long> least;
    std::size_t rising = 0;
    std::vector<long long> rising_word;

    void walk(Mask current) {
        if (current == top) {
            if (least.empty() || word < least) least = word;
            if (std::is_sorted(word.begin(), word.end())) {
                ++rising;
                rising_word = word;
            }
            return;
        }
        for_each_element(top & ~current, [&](int a) {
            const Mask next = current | element_bit(a);
            if (!poset.contains(next)) return;
            word.push_back(poset.scaled_label(a));
            walk(next);
            word.pop_back();
        });
    }
};

}  // namespace

ElCheck el_labeling_verify(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("el_labeling_verify: empty weight vector");
    require_cap(n, caps.el_labeling, "el_labeling_verify");
    if (!lambda.distinct_entries()) {
        throw InvalidArgument("el_labeling_verify: weights must be pairwise distinct (perturb first)");
    }
    if (lambda.scaled_total() <= 0) throw InvalidArgument("el_labeling_verify: total weight must be positive");

    const CubePoset poset(lambda);
    ElCheck result;
    if (!poset.graded_by_cardinality()) {
        result.ok = false;
        return result;
    }
    for (Mask s : poset.elements()) {
        for (Mask t = (s - 1) & s;; t = (t - 1) & s) {
            if (poset.contains(t)) {
                IntervalScan scan{poset, s, {}, {}, 0, {}};
                scan.walk(t);
                ++result.intervals_checked;
                if (scan.rising != 1 || scan.rising_word != scan.least) {
                    result.ok = false;
                    result.counterexample = std::make_pair(t, s);
                    return result;
                }
            }
            if (t == 0) break;
        }
    }
    return result;
}

std::vector<Mask> face_to_chain(const OrderedPartition& sigma, const WeightVector& lambda) {
    if (!in_P(lambda, sigma)) throw InvalidArgument("face_to_chain: ordered partition is not a face");
    std::vector<Mask> chain;
    Mask acc = 0;
    for (int j = 1; j < sigma.size(); ++j) {
        acc |= sigma.block(j);
        chain.push_back(acc);
    }
    return chain;
}

OrderedPartition chain_to_face(int n, std::span<const Mask> chain) {
    std::vector<Mask> blocks;
    Mask prev = 0;
    for (Mask s : chain) {
        if ((s & prev) != prev || s == prev || s == full_mask(n) || (s & ~full_mask(n))) {
            throw InvalidArgument("chain_to_face: not a strictly increasing chain of proper subsets");
        }
        blocks.push_back(s & ~prev);
        prev = s;
    }
    blocks.push_back(full_mask(n) & ~prev);
    return OrderedPartition(n, blocks);
}

}  // namespace coxid
