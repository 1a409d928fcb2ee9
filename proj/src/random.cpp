#include "coxid/random.hpp"

#include <limits>
#include <algorithm>

#include "coxid/error.hpp"

namespace coxid {

long long Rng::uniform(long long lo, long long hi) {
    if (hi < lo) throw InvalidArgument("empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<long long>(draw % span);
}

namespace {

Rational draw(Rng& rng, long long lo, long long hi) {
    return Rational(rng.uniform(lo, hi), rng.uniform(1, 4));
}

std::vector<Rational> draw_all(int n, Rng& rng, long long lo, long long hi) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(draw(rng, lo, hi));
    return v;
}

}  // namespace

WeightVector random_weights(int n, WeightFamily family, Rng& rng) {
    if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("random_weights: n must be in [1, 16]");
    switch (family) {
        case WeightFamily::Any:
            return WeightVector(draw_all(n, rng, -9, 9));
        case WeightFamily::AllPositive:
            return WeightVector(draw_all(n, rng, 1, 9));
        case WeightFamily::FirstNonpositive: {
            auto v = draw_all(n, rng, -9, 9);
            v[0] = draw(rng, -9, 0);
            return WeightVector(v);
        }
        case WeightFamily::WeaklyIncreasing: {
            auto v = draw_all(n, rng, -9, 9);
            std::sort(v.begin(), v.end());
            return WeightVector(v);
        }
        case WeightFamily::WeaklyDecreasing:
            while (true) {
                auto v = draw_all(n, rng, -9, 9);
                std::sort(v.begin(), v.end(), std::greater<>());
                WeightVector w(v);
                if (w.scaled_total() > 0) return w;
            }
        case WeightFamily::DistinctPositiveSum:
            while (true) {
                WeightVector w(draw_all(n, rng, -9, 9));
                if (w.scaled_total() > 0 && w.distinct_entries()) return w;
            }
    }
    throw InvalidArgument("unknown weight family");
}

}  // namespace coxid
