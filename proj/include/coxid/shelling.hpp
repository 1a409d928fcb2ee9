#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxid/complex.hpp"
#include "coxid/random.hpp"

namespace coxid {

/// A facet order together with the restriction face R(F_j) of every facet.
/// The intervals [R(F_j), F_j] partition the face set when the certificate is valid.
struct ShellingCertificate {
    std::vector<Permutation> facet_order;
    std::vector<OrderedPartition> restrictions;
    std::vector<std::size_t> homology_facets;  // indices j with R(F_j) = F_j
    Permutation sorting;                       // tau with tau(lambda) weakly decreasing
};

/// Decomposition of Sigma(lambda) into intervals [R(tau), tau], tau in A(lambda).
///
/// lambda is first relabeled to weakly decreasing order by `sorting`; there each
/// face sigma is assigned to [R(f(sigma)), f(sigma)], and every interval is
/// enumerated to confirm the union is disjoint, exhaustive and inside the
/// complex. The facets come back in original labels, ordered by a linear
/// extension of weak Bruhat order (inversions, then lexicographic) in sorted
/// labels. Throws VerificationFailure if any of the checks fails.
ShellingCertificate decomposition(const WeightedComplex& c);

struct ShellingCheck {
    bool is_shelling = true;
    std::optional<std::size_t> first_bad_index;  // first facet whose intersection is not pure
    std::vector<OrderedPartition> restrictions;  // minimal new face of each facet
    std::vector<std::size_t> homology_facets;
    bool interval_condition = true;  // the same order judged by the interval criterion

    bool consistent() const { return is_shelling == interval_condition; }
};

/// Checks the shelling definition directly: for j >= 2 the intersection of F_j
/// with F_1 u ... u F_{j-1} must be pure of dimension n - 3. Restrictions are
/// read off from the codimension-one faces shared with earlier facets, then
/// `interval_condition` re-checks the order through those intervals.
/// Throws InvalidArgument unless `order` lists the facets of c exactly once.
ShellingCheck verify_shelling(const WeightedComplex& c, std::span<const Permutation> order);

/// Interval criterion for a decomposition candidate: the intervals [R_j, F_j]
/// are disjoint, lie in the complex and cover it, and every face of F_j lies in
/// some interval with index i <= j.
bool interval_condition_holds(const WeightedComplex& c, std::span<const Permutation> order,
                              std::span<const OrderedPartition> restrictions);

/// Uniformly random choice among available minimal elements, over all of S_n.
std::vector<Permutation> random_weak_bruhat_linear_extension(int n, Rng& rng);

/// Keeps the members of `facets` in the order they appear in `order`.
std::vector<Permutation> restrict_order(std::span<const Permutation> order, std::span<const Permutation> facets);

/// Sorted by inversion count, then lexicographically.
std::vector<Permutation> weak_bruhat_rank_order(std::vector<Permutation> facets);

/// Facets sorted by the label words (-lambda_{tau_1}, ..., -lambda_{tau_n}).
/// Throws InvalidArgument when lambda has repeated entries.
std::vector<Permutation> lexicographic_order(const WeightVector& lambda, std::vector<Permutation> facets);

}  // namespace coxid
