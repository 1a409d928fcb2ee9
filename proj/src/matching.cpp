#include "coxid/matching.hpp"

#include <algorithm>

#include "coxid/error.hpp"

namespace coxid {

Matching::Matching(int n, std::span<const Edge> edges) {
    if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("matching ground set must be in [1, 16]");
    if (static_cast<int>(edges.size()) != n / 2) throw InvalidArgument("maximal matching needs floor(n/2) edges");
    for (auto [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b) throw InvalidArgument("edge endpoint outside [n]");
        if (partner_[a - 1] || partner_[b - 1]) throw InvalidArgument("matching edges overlap");
        partner_[a - 1] = static_cast<std::uint8_t>(b);
        partner_[b - 1] = static_cast<std::uint8_t>(a);
    }
    n_ = static_cast<std::uint8_t>(n);
}

std::optional<int> Matching::isolated() const {
    for (int v = 1; v <= n_; ++v)
        if (partner_[v - 1] == 0) return v;
    return std::nullopt;
}

std::vector<Matching::Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (int v = 1; v <= n_; ++v)
        if (partner_[v - 1] > v) out.emplace_back(v, partner_[v - 1]);
    return out;
}

unsigned long long maximal_matching_count(int n) {
    unsigned long long c = 1;
    for (int k = (n % 2 == 0) ? n - 1 : n; k > 1; k -= 2) c *= static_cast<unsigned long long>(k);
    return c;
}

std::vector<Matching> enumerate_maximal_matchings(int n, const Caps& caps) {
    std::vector<Matching> out;
    out.reserve(maximal_matching_count(std::min(n, caps.matchings)));
    for_each_maximal_matching(n, caps, [&](const Matching& p) { out.push_back(p); });
    return out;
}

int crossings(const Matching& p) {
    const auto e = p.edges();
    int count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            const auto [a, c] = e[i];
            const auto [b, d] = e[j];
            if (a < b && b < c && c < d) ++count;
        }
    }
    return count;
}

int matching_sign(const Matching& p) {
    int s = parity_sign(crossings(p));
    if (p.ground_size() % 2 == 1) s *= parity_sign(*p.isolated() - 1);
    return s;
}

bool is_sstar(const Permutation& tau) {
    const int m = tau.size() / 2;
    for (int j = 1; j <= m; ++j) {
        if (tau[2 * j - 1] > tau[2 * j]) return false;
        if (j > 1 && tau[2 * j - 3] > tau[2 * j - 1]) return false;
    }
    return true;
}

Matching sstar_to_matching(const Permutation& tau) {
    if (!is_sstar(tau)) throw InvalidArgument("permutation " + tau.to_string() + " is not in S_n^**");
    std::vector<Matching::Edge> edges;
    for (int j = 1; j <= tau.size() / 2; ++j) edges.emplace_back(tau[2 * j - 1], tau[2 * j]);
    return Matching(tau.size(), edges);
}

Permutation matching_to_sstar(const Matching& p) {
    std::vector<int> v;
    for (auto [a, b] : p.edges()) {
        v.push_back(a);
        v.push_back(b);
    }
    if (auto i = p.isolated()) v.push_back(*i);
    return Permutation(v);
}

Matching matching_lift(const Matching& p) {
    const int n = p.ground_size();
    if (n % 2 == 0) throw InvalidArgument("matching_lift needs an odd ground set");
    if (n + 1 > kMaxGroundSet) throw InvalidArgument("lifted matching exceeds 16 vertices");
    auto edges = p.edges();
    edges.emplace_back(*p.isolated(), n + 1);
    return Matching(n + 1, edges);
}

}  // namespace coxid
