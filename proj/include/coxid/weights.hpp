#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxid/bits.hpp"
#include "coxid/permutation.hpp"

namespace coxid {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3", "5/2", "-1/6". Floating-point spellings are rejected.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// A weight sequence lambda = (lambda_1, ..., lambda_n) of exact rationals, n <= 16.
///
/// Stored as integer numerators over one positive common denominator, so every
/// subset sum lambda_S is an exact int64 and sign tests on it are exact. The
/// representation is normalized, so equal sequences compare equal.
class WeightVector {
public:
    WeightVector() = default;  // the empty sequence
    explicit WeightVector(std::span<const Rational> values);
    WeightVector(std::initializer_list<long long> integers);

    static WeightVector from_integers(std::span<const long long> integers);
    /// Comma-separated list of integers and fractions, e.g. "5,1,-2,-3" or "1/2,-1/3".
    static WeightVector parse(std::string_view text);
    /// Numerators over a shared positive denominator; normalized on construction.
    static WeightVector from_scaled(std::vector<long long> numerators, long long denominator);

    int size() const { return static_cast<int>(scaled_.size()); }
    bool empty() const { return scaled_.empty(); }

    Rational operator[](int i) const;  // 1-based
    std::vector<Rational> values() const;

    long long scaled(int i) const { return scaled_[i - 1]; }
    std::span<const long long> scaled_values() const { return scaled_; }
    long long denominator() const { return denominator_; }

    /// lambda_S in units of 1/denominator().
    long long scaled_sum(Mask subset) const;
    Rational subset_weight(Mask subset) const;
    bool positive(Mask subset) const { return scaled_sum(subset) > 0; }
    long long scaled_total() const { return scaled_sum(full_mask(size())); }

    std::string to_string() const;  // "5,1,-2,-3"

    WeightVector swapped(int i) const;      // s_i lambda
    WeightVector without_pair(int i) const; // drops positions i and i+1
    WeightVector reversed() const;
    WeightVector permuted(const Permutation& tau) const;  // tau(lambda), left action

    bool weakly_increasing() const;
    bool weakly_decreasing() const;
    bool all_positive() const;
    bool distinct_entries() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<long long> scaled_;
    long long denominator_ = 1;
};

/// Table of lambda_S (scaled) for all 2^n subsets.
std::vector<long long> subset_sum_table(const WeightVector& lambda);

/// Permutation tau with tau(lambda) weakly decreasing; ties keep their relative order.
Permutation decreasing_sort_permutation(const WeightVector& lambda);

/// Symbolic perturbation lambda_i -> lambda_i + i*eps realized with a concrete
/// small eps. Returns nullopt when some nonempty lambda_S is zero, since then
/// the perturbation would change which prefix sums are positive. On success the
/// result has pairwise distinct entries and the same positive subsets as lambda.
std::optional<WeightVector> perturb_to_distinct(const WeightVector& lambda);

}  // namespace coxid
