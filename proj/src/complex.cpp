#include "coxid/complex.hpp"

#include <algorithm>

#include "coxid/error.hpp"

namespace coxid {

namespace {

// Lexicographic comparison of sorted element lists, a proper prefix first.
bool subset_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    const int d = lowest_element(a ^ b);
    if (a & element_bit(d)) return (b & above(d)) != 0;
    return (a & above(d)) == 0;
}

void require_sizes(const WeightVector& lambda, int n) {
    if (lambda.size() != n) throw InvalidArgument("weight vector and ground set sizes differ");
}

void facets_dfs(const WeightVector& lambda, Mask remaining, long long prefix, std::vector<int>& word,
                std::vector<Permutation>& out) {
    if (remaining == 0) {
        out.emplace_back(word);
        return;
    }
    for_each_element(remaining, [&](int e) {
        const long long s = prefix + lambda.scaled(e);
        if (s <= 0) return;
        word.push_back(e);
        facets_dfs(lambda, remaining & ~element_bit(e), s, word, out);
        word.pop_back();
    });
}

}  // namespace

std::string Classification::to_string() const {
    switch (topology) {
        case Topology::Empty: return "Empty";
        case Topology::Ball: return "Ball(" + std::to_string(dimension) + ")";
        case Topology::Sphere: return "Sphere(" + std::to_string(dimension) + ")";
    }
    return "Empty";
}

bool enumeration_less(const OrderedPartition& a, const OrderedPartition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int j = 1; j <= a.size(); ++j) {
        if (a.block(j) != b.block(j)) return subset_lex_less(a.block(j), b.block(j));
    }
    return false;
}

bool in_P(const WeightVector& lambda, const OrderedPartition& sigma) {
    require_sizes(lambda, sigma.ground_size());
    long long prefix = 0;
    for (auto b : sigma.block_masks()) {
        prefix += lambda.scaled_sum(b);
        if (prefix <= 0) return false;
    }
    return true;
}

bool in_A(const WeightVector& lambda, const Permutation& tau) {
    require_sizes(lambda, tau.size());
    long long prefix = 0;
    for (int i = 1; i <= tau.size(); ++i) {
        prefix += lambda.scaled(tau[i]);
        if (prefix <= 0) return false;
    }
    return true;
}

WeightedComplex build_complex_serial(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    require_cap(n, caps.complex, "build_complex");
    WeightedComplex c{lambda, {}, {}};
    for_each_ordered_partition(n, caps, [&](const OrderedPartition& s) {
        if (in_P(lambda, s)) c.faces.push_back(s);
    });
    for (const auto& s : c.faces)
        if (s.all_singletons()) c.facets.push_back(s.as_permutation());
    return c;
}

WeightedComplex build_complex(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("ground set must be nonempty");
    require_cap(n, caps.complex, "build_complex");
    require_cap(n, caps.ordered_partitions, "ordered partition enumeration");
    WeightedComplex c{lambda, {}, {}};
    if (lambda.scaled_total() <= 0) return c;

    const auto sums = subset_sum_table(lambda);
    std::vector<std::vector<OrderedPartition>> by_blocks(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (int k = 1; k <= n; ++k) {
        auto& bucket = by_blocks[static_cast<std::size_t>(k - 1)];
        for_each_ordered_partition_with_blocks(n, k, [&](const OrderedPartition& s) {
            long long prefix = 0;
            for (auto b : s.block_masks()) {
                prefix += sums[b];
                if (prefix <= 0) return;
            }
            bucket.push_back(s);
        });
    }
    std::size_t total = 0;
    for (const auto& b : by_blocks) total += b.size();
    c.faces.reserve(total);
    for (auto& b : by_blocks) c.faces.insert(c.faces.end(), b.begin(), b.end());
    c.facets.reserve(by_blocks.back().size());
    for (const auto& s : by_blocks.back()) c.facets.push_back(s.as_permutation());
    return c;
}

std::vector<Permutation> enumerate_facets(const WeightVector& lambda, const Caps& caps) {
    const int n = lambda.size();
    if (n < 1) throw InvalidArgument("ground set must be nonempty");
    require_cap(n, caps.facets, "facet enumeration");
    std::vector<Permutation> out;
    std::vector<int> word;
    facets_dfs(lambda, full_mask(n), 0, word, out);
    return out;
}

OrderedPartition split_max(const OrderedPartition& sigma, int j, const WeightVector& lambda) {
    if (!in_P(lambda, sigma)) throw InvalidArgument("split_max: ordered partition is not a face");
    if (j < 1 || j > sigma.size()) throw InvalidArgument("split_max: block index out of range");
    const Mask block = sigma.block(j);
    if (popcount(block) < 2) throw InvalidArgument("split_max: block is a singleton");
    int best = 0;
    for_each_element(block, [&](int e) {
        if (best == 0 || lambda.scaled(e) > lambda.scaled(best)) best = e;
    });
    std::vector<Mask> blocks;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (i == j) {
            blocks.push_back(element_bit(best));
            blocks.push_back(block & ~element_bit(best));
        } else {
            blocks.push_back(sigma.block(i));
        }
    }
    return OrderedPartition(sigma.ground_size(), blocks);
}

OrderedPartition split_block(const OrderedPartition& sigma, int j, Mask b, const WeightVector& lambda) {
    if (!in_P(lambda, sigma)) throw InvalidArgument("split_block: ordered partition is not a face");
    if (j < 1 || j > sigma.size()) throw InvalidArgument("split_block: block index out of range");
    const Mask block = sigma.block(j);
    if (b == 0 || b == block || (b & ~block) != 0) {
        throw InvalidArgument("split_block: B must be a nonempty proper subset of the block");
    }
    const bool b_first = lambda.scaled_sum(b) > 0;
    std::vector<Mask> blocks;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (i == j) {
            blocks.push_back(b_first ? b : block & ~b);
            blocks.push_back(b_first ? block & ~b : b);
        } else {
            blocks.push_back(sigma.block(i));
        }
    }
    return OrderedPartition(sigma.ground_size(), blocks);
}

Permutation facet_below(const OrderedPartition& sigma, const WeightVector& lambda) {
    if (!in_P(lambda, sigma)) throw InvalidArgument("facet_below: ordered partition is not a face");
    OrderedPartition current = sigma;
    while (!current.all_singletons()) {
        int j = 1;
        while (popcount(current.block(j)) == 1) ++j;
        current = split_max(current, j, lambda);
    }
    return current.as_permutation();
}

std::vector<long long> f_vector(const WeightedComplex& c) {
    std::vector<long long> f(static_cast<std::size_t>(c.ground_size()), 0);
    for (const auto& s : c.faces) ++f[static_cast<std::size_t>(s.size() - 1)];
    return f;
}

long long euler_sum(const WeightedComplex& c) {
    long long total = 0;
    for (const auto& s : c.faces) total += parity_sign(s.size());
    return total;
}

long long euler_closed_form(const WeightVector& lambda) {
    return lambda.all_positive() ? parity_sign(lambda.size()) : 0;
}

Classification classify(const WeightVector& lambda) {
    if (lambda.scaled_total() <= 0) return {Topology::Empty, -1};
    const int d = lambda.size() - 2;
    return {lambda.all_positive() ? Topology::Sphere : Topology::Ball, d};
}

Classification classify(const WeightedComplex& c) { return classify(c.lambda); }

WeightedComplex relabel(const Permutation& tau, const WeightedComplex& c) {
    if (tau.size() != c.ground_size()) throw InvalidArgument("relabel: size mismatch");
    WeightedComplex out{c.lambda.permuted(tau), {}, {}};
    out.faces.reserve(c.faces.size());
    for (const auto& s : c.faces) out.faces.push_back(relabel(tau, s));
    std::sort(out.faces.begin(), out.faces.end(), enumeration_less);
    for (const auto& s : out.faces)
        if (s.all_singletons()) out.facets.push_back(s.as_permutation());
    return out;
}

}  // namespace coxid
