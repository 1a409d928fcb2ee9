#include "coxid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coxid/error.hpp"

namespace coxid {

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

Composition make_composition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 1) throw InvalidArgument("composition parts must be positive");
    }
    return Composition{std::move(parts)};
}

Permutation::Permutation(std::span<const int> one_line) {
    const auto n = static_cast<int>(one_line.size());
    if (n < 1 || n > kMaxGroundSet) {
        throw InvalidArgument("permutation length must be in [1, 16], got " + std::to_string(n));
    }
    Mask seen = 0;
    for (int i = 0; i < n; ++i) {
        const int v = one_line[i];
        if (v < 1 || v > n || (seen & element_bit(v))) {
            throw InvalidArgument("not a permutation of [" + std::to_string(n) + "]");
        }
        seen |= element_bit(v);
        values_[i] = static_cast<std::uint8_t>(v);
    }
    n_ = static_cast<std::uint8_t>(n);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(v);
}

int Permutation::at(int position) const {
    if (position < 1 || position > n_) throw InvalidArgument("position out of range");
    return values_[position - 1];
}

std::vector<int> Permutation::one_line() const { return {values_.begin(), values_.begin() + n_}; }

std::string Permutation::to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out = *this;
    for (int i = 0; i < n_; ++i) out.values_[values_[i] - 1] = static_cast<std::uint8_t>(i + 1);
    return out;
}

Permutation Permutation::compose(const Permutation& right) const {
    if (right.n_ != n_) throw InvalidArgument("composing permutations of different sizes");
    Permutation out = *this;
    for (int i = 0; i < n_; ++i) out.values_[i] = values_[right.values_[i] - 1];
    return out;
}

Permutation Permutation::swap_positions(int i) const {
    if (i < 1 || i >= n_) throw InvalidArgument("adjacent transposition index out of range");
    Permutation out = *this;
    std::swap(out.values_[i - 1], out.values_[i]);
    return out;
}

Mask Permutation::apply(Mask subset) const {
    Mask out = 0;
    for_each_element(subset, [&](int a) { out |= element_bit(values_[a - 1]); });
    return out;
}

long long inversions(const Permutation& tau) {
    long long count = 0;
    const int n = tau.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (tau[i] > tau[j]) ++count;
    return count;
}

int sign(const Permutation& tau) { return parity_sign(inversions(tau)); }

std::vector<int> descent_set(const Permutation& tau) {
    std::vector<int> out;
    for (int i = 1; i < tau.size(); ++i)
        if (tau[i] > tau[i + 1]) out.push_back(i);
    return out;
}

Composition descent_composition(const Permutation& tau) {
    Composition c;
    int run = 1;
    for (int i = 1; i < tau.size(); ++i) {
        if (tau[i] > tau[i + 1]) {
            c.parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    c.parts.push_back(run);
    return c;
}

std::vector<Permutation> weak_bruhat_covers(const Permutation& tau) {
    std::vector<Permutation> out;
    for (int i = 1; i < tau.size(); ++i)
        if (tau[i] < tau[i + 1]) out.push_back(tau.swap_positions(i));
    return out;
}

std::vector<Permutation> weak_bruhat_lower_covers(const Permutation& tau) {
    std::vector<Permutation> out;
    for (int i = 1; i < tau.size(); ++i)
        if (tau[i] > tau[i + 1]) out.push_back(tau.swap_positions(i));
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::size_t permutation_rank(const Permutation& tau) {
    const int n = tau.size();
    std::size_t rank = 0;
    Mask used = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = tau[i];
        const int smaller_unused = v - 1 - popcount(used & full_mask(v - 1));
        rank = rank * static_cast<std::size_t>(n - i + 1) + static_cast<std::size_t>(smaller_unused);
        used |= element_bit(v);
    }
    return rank;
}

bool respects_weak_bruhat(std::span<const Permutation> order) {
    std::unordered_map<std::size_t, std::size_t> position;
    position.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!order.empty() && order[i].size() != order[0].size()) {
            throw InvalidArgument("order mixes permutations of different sizes");
        }
        if (!position.emplace(permutation_rank(order[i]), i).second) {
            throw InvalidArgument("order contains a duplicate permutation");
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& up : weak_bruhat_covers(order[i])) {
            auto it = position.find(permutation_rank(up));
            if (it != position.end() && it->second < i) return false;
        }
    }
    return true;
}

bool is_weak_bruhat_linear_extension(std::span<const Permutation> order) {
    if (order.empty()) throw InvalidArgument("empty order");
    const int n = order[0].size();
    std::size_t expected = 1;
    for (int i = 2; i <= n; ++i) expected *= static_cast<std::size_t>(i);
    if (order.size() != expected) {
        throw InvalidArgument("order must list all " + std::to_string(expected) + " permutations");
    }
    return respects_weak_bruhat(order);
}

}  // namespace coxid
