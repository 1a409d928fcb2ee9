#include "coxid/shelling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "coxid/error.hpp"

namespace coxid {

namespace {

Mask descent_cuts(const Permutation& tau) {
    Mask cuts = 0;
    for (int d : descent_set(tau)) cuts |= element_bit(d);
    return cuts;
}

// Visits every superset of `base` inside `universe`.
template <class F>
void for_each_superset(Mask base, Mask universe, F&& visit) {
    const Mask free = universe & ~base;
    Mask sub = free;
    while (true) {
        visit(base | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free;
    }
}

std::vector<Mask> prefix_sets(const Permutation& tau) {
    std::vector<Mask> out(static_cast<std::size_t>(tau.size()), 0);
    Mask acc = 0;
    for (int t = 1; t <= tau.size(); ++t) {
        acc |= element_bit(tau[t]);
        out[t - 1] = acc;
    }
    return out;
}

void require_facet_enumeration(const WeightedComplex& c, std::span<const Permutation> order) {
    if (order.size() != c.facets.size()) {
        throw InvalidArgument("order has " + std::to_string(order.size()) + " facets, complex has " +
                              std::to_string(c.facets.size()));
    }
    std::unordered_set<std::size_t> facets;
    for (const auto& f : c.facets) facets.insert(permutation_rank(f));
    std::unordered_set<std::size_t> seen;
    for (const auto& f : order) {
        if (f.size() != c.ground_size() || !facets.count(permutation_rank(f))) {
            throw InvalidArgument("order lists " + f.to_string() + ", which is not a facet");
        }
        if (!seen.insert(permutation_rank(f)).second) {
            throw InvalidArgument("order lists facet " + f.to_string() + " twice");
        }
    }
}

}  // namespace

ShellingCertificate decomposition(const WeightedComplex& c) {
    const int n = c.ground_size();
    ShellingCertificate cert;
    cert.sorting = decreasing_sort_permutation(c.lambda);
    if (c.empty()) return cert;

    const Permutation& tau = cert.sorting;
    const Permutation tau_inv = tau.inverse();
    const WeightVector sorted = c.lambda.permuted(tau);

    std::unordered_set<std::size_t> facet_ranks;
    std::vector<Permutation> sorted_facets;
    for (const auto& f : c.facets) {
        sorted_facets.push_back(tau.compose(f));
        facet_ranks.insert(permutation_rank(sorted_facets.back()));
    }

    // Every face maps to an interval whose top is a facet.
    for (const auto& s : c.faces) {
        const auto moved = relabel(tau, s);
        const auto top = f_map(moved);
        if (!facet_ranks.count(permutation_rank(top))) {
            throw VerificationFailure("decomposition: f(sigma) is not a facet for sigma = " + moved.label());
        }
        if (!refines(moved, R_of_perm(top))) {
            throw VerificationFailure("decomposition: sigma lies outside [R(f(sigma)), f(sigma)]");
        }
    }

    // The intervals are disjoint, lie in the complex, and cover it.
    std::unordered_map<OrderedPartition, int, OrderedPartitionHash> hits;
    hits.reserve(c.faces.size());
    const Mask positions = full_mask(n - 1);
    for (const auto& top : sorted_facets) {
        for_each_superset(descent_cuts(top), positions, [&](Mask cuts) {
            const auto face = face_with_cuts(top, cuts);
            if (!in_P(sorted, face)) {
                throw VerificationFailure("decomposition: interval of " + top.to_string() + " leaves the complex");
            }
            if (++hits[face] > 1) {
                throw VerificationFailure("decomposition: face " + face.label() + " lies in two intervals");
            }
        });
    }
    if (hits.size() != c.faces.size()) {
        throw VerificationFailure("decomposition: intervals do not cover every face");
    }

    sorted_facets = weak_bruhat_rank_order(std::move(sorted_facets));
    for (std::size_t j = 0; j < sorted_facets.size(); ++j) {
        const auto& top = sorted_facets[j];
        const auto restriction = R_of_perm(top);
        cert.facet_order.push_back(tau_inv.compose(top));
        cert.restrictions.push_back(relabel(tau_inv, restriction));
        if (restriction.all_singletons()) cert.homology_facets.push_back(j);
    }
    return cert;
}

ShellingCheck verify_shelling(const WeightedComplex& c, std::span<const Permutation> order) {
    require_facet_enumeration(c, order);
    const int n = c.ground_size();
    const Mask vertices = full_mask(n - 1);  // vertex t of a facet is its prefix of length t

    std::vector<std::vector<Mask>> prefixes;
    prefixes.reserve(order.size());
    for (const auto& f : order) prefixes.push_back(prefix_sets(f));

    ShellingCheck check;
    std::vector<Mask> shared(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        Mask removable = 0;  // vertices v with F_j - v inside the earlier union
        for (std::size_t i = 0; i < j; ++i) {
            Mask common = 0;
            for (int t = 1; t < n; ++t)
                if (prefixes[j][t - 1] == prefixes[i][t - 1]) common |= element_bit(t);
            shared[i] = common;
            if (popcount(vertices & ~common) == 1) removable |= vertices & ~common;
        }
        bool pure = true;
        for (std::size_t i = 0; i < j && pure; ++i) pure = (vertices & ~shared[i] & removable) != 0;
        if (!pure && check.is_shelling) {
            check.is_shelling = false;
            check.first_bad_index = j;
        }
        check.restrictions.push_back(face_with_cuts(order[j], removable));
        if (removable == vertices) check.homology_facets.push_back(j);
    }
    check.interval_condition = interval_condition_holds(c, order, check.restrictions);
    return check;
}

bool interval_condition_holds(const WeightedComplex& c, std::span<const Permutation> order,
                              std::span<const OrderedPartition> restrictions) {
    if (order.size() != restrictions.size()) throw InvalidArgument("one restriction per facet required");
    const int n = c.ground_size();
    const Mask positions = n > 1 ? full_mask(n - 1) : 0;

    std::unordered_map<OrderedPartition, std::size_t, OrderedPartitionHash> owner;
    owner.reserve(c.faces.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        const auto top = OrderedPartition::singletons(order[j]);
        if (!refines(top, restrictions[j])) return false;
        bool ok = true;
        for_each_superset(restrictions[j].cut_positions(), positions, [&](Mask cuts) {
            const auto face = face_with_cuts(order[j], cuts);
            if (!in_P(c.lambda, face) || !owner.emplace(face, j).second) ok = false;
        });
        if (!ok) return false;
    }
    if (owner.size() != c.faces.size()) return false;

    for (std::size_t j = 0; j < order.size(); ++j) {
        bool ok = true;
        for_each_superset(0, positions, [&](Mask cuts) {
            auto it = owner.find(face_with_cuts(order[j], cuts));
            if (it == owner.end() || it->second > j) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<Permutation> random_weak_bruhat_linear_extension(int n, Rng& rng) {
    const auto all = all_permutations(n);
    std::vector<int> pending(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
        pending[i] = static_cast<int>(weak_bruhat_lower_covers(all[i]).size());
    }
    std::vector<std::size_t> available;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (pending[i] == 0) available.push_back(i);

    std::vector<Permutation> out;
    out.reserve(all.size());
    while (!available.empty()) {
        const std::size_t pick = rng.below(available.size());
        const std::size_t idx = available[pick];
        available[pick] = available.back();
        available.pop_back();
        out.push_back(all[idx]);
        for (const auto& up : weak_bruhat_covers(all[idx])) {
            // all_permutations is in lexicographic order, which is rank order.
            const std::size_t u = permutation_rank(up);
            if (--pending[u] == 0) available.push_back(u);
        }
    }
    return out;
}

std::vector<Permutation> restrict_order(std::span<const Permutation> order, std::span<const Permutation> facets) {
    std::unordered_set<std::size_t> keep;
    for (const auto& f : facets) keep.insert(permutation_rank(f));
    std::vector<Permutation> out;
    for (const auto& p : order)
        if (keep.count(permutation_rank(p))) out.push_back(p);
    return out;
}

std::vector<Permutation> weak_bruhat_rank_order(std::vector<Permutation> facets) {
    std::stable_sort(facets.begin(), facets.end(), [](const Permutation& a, const Permutation& b) {
        const auto ia = inversions(a), ib = inversions(b);
        return ia != ib ? ia < ib : a < b;
    });
    return facets;
}

std::vector<Permutation> lexicographic_order(const WeightVector& lambda, std::vector<Permutation> facets) {
    if (!lambda.distinct_entries()) {
        throw InvalidArgument("lexicographic order needs pairwise distinct weights");
    }
    std::sort(facets.begin(), facets.end(), [&](const Permutation& a, const Permutation& b) {
        for (int i = 1; i <= a.size(); ++i) {
            const long long la = -lambda.scaled(a[i]), lb = -lambda.scaled(b[i]);
            if (la != lb) return la < lb;
        }
        return false;
    });
    return facets;
}

}  // namespace coxid
