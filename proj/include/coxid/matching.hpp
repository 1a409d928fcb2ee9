#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coxid/bits.hpp"
#include "coxid/caps.hpp"
#include "coxid/permutation.hpp"

namespace coxid {

/// A maximal matching on [n]: floor(n/2) disjoint edges, plus one isolated
/// vertex when n is odd.
class Matching {
public:
    using Edge = std::pair<int, int>;  // first < second

    Matching() = default;

    /// Throws InvalidArgument unless the edges are disjoint and leave exactly
    /// n mod 2 vertices uncovered.
    Matching(int n, std::span<const Edge> edges);
    Matching(int n, std::initializer_list<Edge> edges)
        : Matching(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int ground_size() const { return n_; }
    int partner(int v) const { return partner_[v - 1]; }  // 0 when isolated
    std::optional<int> isolated() const;
    std::vector<Edge> edges() const;  // sorted by first endpoint

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    friend struct MatchingBuilder;
    std::array<std::uint8_t, kMaxGroundSet + 1> partner_{};
    std::uint8_t n_ = 0;
};

struct MatchingBuilder {
    static Matching from_partners(int n, std::span<const int> partner) {
        Matching m;
        m.n_ = static_cast<std::uint8_t>(n);
        for (int v = 1; v <= n; ++v) m.partner_[v - 1] = static_cast<std::uint8_t>(partner[v]);
        return m;
    }
};

/// (n-1)!! for even n, n (n-2)!! for odd n.
unsigned long long maximal_matching_count(int n);

namespace detail {

template <class F>
void maximal_matchings_rec(int n, std::vector<int>& partner, Mask unmatched, bool isolated_used, F& visit) {
    if (unmatched == 0) {
        visit(MatchingBuilder::from_partners(n, partner));
        return;
    }
    const int a = lowest_element(unmatched);
    const Mask rest = unmatched & ~element_bit(a);
    if ((n & 1) && !isolated_used) {
        partner[a] = 0;
        maximal_matchings_rec(n, partner, rest, true, visit);
    }
    for_each_element(rest, [&](int b) {
        partner[a] = b;
        partner[b] = a;
        maximal_matchings_rec(n, partner, rest & ~element_bit(b), isolated_used, visit);
        partner[b] = 0;
    });
    partner[a] = 0;
}

}  // namespace detail

/// Visits every maximal matching on [n] once. Throws CapExceeded beyond caps.matchings.
template <class F>
void for_each_maximal_matching(int n, const Caps& caps, F&& visit) {
    if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("matching ground set must be in [1, 16]");
    require_cap(n, caps.matchings, "maximal matching enumeration");
    std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
    detail::maximal_matchings_rec(n, partner, full_mask(n), false, visit);
}

std::vector<Matching> enumerate_maximal_matchings(int n, const Caps& caps = {});

/// Pairs of edges {a,c}, {b,d} with a < b < c < d.
int crossings(const Matching& p);

/// (-1)^cross(p), times (-1)^(i-1) for the isolated vertex i when n is odd.
int matching_sign(const Matching& p);

/// Membership in S_n^**: tau_{2j-1} < tau_{2j} and tau_1 < tau_3 < ... < tau_{2m-1}.
bool is_sstar(const Permutation& tau);

/// {{tau_1,tau_2}, ..., {tau_{2m-1},tau_{2m}}}, isolated tau_n for odd n.
/// Throws InvalidArgument when tau is not in S_n^**.
Matching sstar_to_matching(const Permutation& tau);

/// Inverse of sstar_to_matching.
Permutation matching_to_sstar(const Matching& p);

/// Joins the isolated vertex to the new vertex n+1. Throws InvalidArgument for even n.
Matching matching_lift(const Matching& p);

}  // namespace coxid
