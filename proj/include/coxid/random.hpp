#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "coxid/weights.hpp"

namespace coxid {

/// Seeded generator with platform-independent integer draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi], by rejection sampling.
    long long uniform(long long lo, long long hi);
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(uniform(0, static_cast<long long>(bound) - 1)); }

private:
    std::mt19937_64 engine_;
};

/// Weight populations used by the sweeps and the acceptance suite.
/// Numerators are drawn from [-9, 9] and denominators from [1, 4].
enum class WeightFamily {
    Any,                  // unrestricted
    AllPositive,          // every lambda_i > 0
    FirstNonpositive,     // lambda_1 <= 0
    WeaklyIncreasing,     // sorted ascending
    WeaklyDecreasing,     // sorted descending, lambda_[n] > 0
    DistinctPositiveSum,  // pairwise distinct, lambda_[n] > 0
};

WeightVector random_weights(int n, WeightFamily family, Rng& rng);

/// Calls visit(lambda) for every lambda in values^n, odometer order (last position fastest).
template <class F>
void for_each_grid_point(int n, std::span<const long long> values, F&& visit) {
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    std::vector<long long> point(static_cast<std::size_t>(n));
    while (true) {
        for (int i = 0; i < n; ++i) point[i] = values[digit[i]];
        visit(WeightVector::from_integers(point));
        int pos = n - 1;
        while (pos >= 0 && ++digit[pos] == values.size()) digit[pos--] = 0;
        if (pos < 0) return;
    }
}

}  // namespace coxid
