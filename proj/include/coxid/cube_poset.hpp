#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coxid/caps.hpp"
#include "coxid/ordered_partition.hpp"
#include "coxid/weights.hpp"

namespace coxid {

/// B(lambda): subsets S of [n] with lambda_S > 0, together with the empty set,
/// ordered by inclusion. The cover T < T u {a} carries the label -lambda_a.
class CubePoset {
public:
    struct Cover {
        Mask lower;
        Mask upper;
        int element;  // the a with upper = lower u {a}
    };

    explicit CubePoset(WeightVector lambda);

    const WeightVector& lambda() const { return lambda_; }
    int ground_size() const { return lambda_.size(); }
    bool contains(Mask s) const { return member_[s]; }
    const std::vector<Mask>& elements() const { return elements_; }  // by size, then mask

    Rational label(int a) const { return -lambda_[a]; }
    long long scaled_label(int a) const { return -lambda_.scaled(a); }

    /// Single-element covers between members.
    std::vector<Cover> covers() const;

    /// Every T strictly inside S (both members) admits a in S - T with T u {a}
    /// a member; hence all covers add one element and cardinality is a rank function.
    bool graded_by_cardinality() const;

private:
    WeightVector lambda_;
    std::vector<bool> member_;
    std::vector<Mask> elements_;
};

CubePoset build_cube_poset(const WeightVector& lambda);

struct ElCheck {
    bool ok = true;
    std::optional<std::pair<Mask, Mask>> counterexample;  // failing interval [T, S]
    std::size_t intervals_checked = 0;
};

/// Exhaustively checks every interval [T, S] of B(lambda): exactly one saturated
/// chain has weakly rising labels, and its label word is lexicographically least.
/// Throws InvalidArgument when entries repeat or lambda_[n] <= 0.
ElCheck el_labeling_verify(const WeightVector& lambda, const Caps& caps = {});

/// Proper nonempty prefix unions C_1 c C_1 u C_2 c ... of a face; empty for ([n]).
/// Throws InvalidArgument when sigma is not in P(lambda).
std::vector<Mask> face_to_chain(const OrderedPartition& sigma, const WeightVector& lambda);

/// Inverse of face_to_chain. Throws InvalidArgument when the chain is not strictly increasing.
OrderedPartition chain_to_face(int n, std::span<const Mask> chain);

}  // namespace coxid
