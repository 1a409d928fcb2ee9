#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coxid/bits.hpp"
#include "coxid/caps.hpp"
#include "coxid/composition.hpp"

namespace coxid {

/// A permutation of [n] in one-line notation tau_1 tau_2 ... tau_n (values 1-based).
///
/// Acting on a vector uses the left action: position i of tau(x) holds the entry
/// of x at position tau^{-1}(i), so the entry at position a moves to tau(a).
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidArgument unless `one_line` is a bijection [n] -> [n], 1 <= n <= 16.
    explicit Permutation(std::span<const int> one_line);
    Permutation(std::initializer_list<int> one_line)
        : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

    static Permutation identity(int n);
    static Permutation longest(int n);  // n ... 2 1

    int size() const { return n_; }
    int operator[](int position) const { return values_[position - 1]; }  // 1-based
    int at(int position) const;

    std::vector<int> one_line() const;
    std::string to_string() const;  // digits joined by spaces, e.g. "2 1 4 3"

    Permutation inverse() const;
    Permutation compose(const Permutation& right) const;  // (this o right)(i)
    Permutation swap_positions(int i) const;              // tau s_i: swaps positions i, i+1

    /// Image of a subset under the permutation.
    Mask apply(Mask subset) const;

    /// Left action on a sequence: result[tau(a)] = x[a].
    template <class T>
    std::vector<T> act(std::span<const T> x) const {
        std::vector<T> out(x.size());
        for (int a = 1; a <= n_; ++a) out[(*this)[a] - 1] = x[a - 1];
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::array<std::uint8_t, kMaxGroundSet> values_{};
    std::uint8_t n_ = 0;
};

long long inversions(const Permutation& tau);
int sign(const Permutation& tau);

/// Positions d with tau_d > tau_{d+1}.
std::vector<int> descent_set(const Permutation& tau);

/// Lengths of the maximal ascending runs.
Composition descent_composition(const Permutation& tau);

/// Upper covers tau s_i in weak Bruhat order (tau_i < tau_{i+1}).
std::vector<Permutation> weak_bruhat_covers(const Permutation& tau);

/// Lower covers tau s_i with tau_i > tau_{i+1}.
std::vector<Permutation> weak_bruhat_lower_covers(const Permutation& tau);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// True iff `order` lists S_n exactly once and every weak-Bruhat cover goes forward.
/// Throws InvalidArgument on duplicates, mixed sizes, or the wrong length.
bool is_weak_bruhat_linear_extension(std::span<const Permutation> order);

/// Same check restricted to a subset of S_n: covers between listed elements go forward.
bool respects_weak_bruhat(std::span<const Permutation> order);

/// Dense index of a permutation among all n! (Lehmer code rank).
std::size_t permutation_rank(const Permutation& tau);

}  // namespace coxid
