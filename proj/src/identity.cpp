#include "coxid/identity.hpp"

#include <map>

#include "coxid/complex.hpp"
#include "coxid/error.hpp"

namespace coxid {

int c1_scaled(long long a) { return a > 0 ? 1 : 0; }

int c2_scaled(long long a, long long b) {
    if (a > 0 && b > 0) return 1;
    if (b <= 0 && a + b > 0) return 2;
    return 0;
}

int c1(const Rational& a) { return a > 0 ? 1 : 0; }

int c2(const Rational& a, const Rational& b) {
    if (a > 0 && b > 0) return 1;
    if (-b >= 0 && a > -b) return 2;
    return 0;
}

long long c_of_matching(const Matching& p, const WeightVector& lambda) {
    if (p.ground_size() != lambda.size()) throw InvalidArgument("matching and weights have different sizes");
    long long c = 1;
    for (auto [i, j] : p.edges()) c *= c2_scaled(lambda.scaled(i), lambda.scaled(j));
    if (auto i = p.isolated()) c *= c1_scaled(lambda.scaled(*i));
    return c;
}

SkewMatrix t_matrix(const WeightVector& lambda) {
    const int n = lambda.size();
    if (n < 1 || n > 15) throw InvalidArgument("t_matrix: n must be in [1, 15]");
    SkewMatrix a(n % 2 ? n + 1 : n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) a.set(i, j, c2_scaled(lambda.scaled(i), lambda.scaled(j)));
        if (n % 2) a.set(i, n + 1, c1_scaled(lambda.scaled(i)));
    }
    return a;
}

long long t_via_pfaffian(const WeightVector& lambda, const Caps& caps) {
    return pfaffian(t_matrix(lambda), caps);
}

long long s_closed_increasing(const WeightVector& lambda) {
    if (!lambda.weakly_increasing()) throw InvalidArgument("s_closed_increasing: weights are not weakly increasing");
    if (lambda.empty()) throw InvalidArgument("s_closed_increasing: empty weight vector");
    return lambda.scaled(1) > 0 ? parity_sign(lambda.size()) : 0;
}

WeightVector reverse_weights(const WeightVector& lambda) { return lambda.reversed(); }

namespace {

long long s_or_convention(const WeightVector& lambda, const Caps& caps) {
    return lambda.empty() ? kEmptySequenceS : s_direct(lambda, caps);
}

long long t_or_convention(const WeightVector& lambda, const Caps& caps) {
    return lambda.empty() ? kEmptySequenceT : t_direct(lambda, caps);
}

long long closed_form(const std::vector<long long>& v) {
    return v.front() > 0 ? parity_sign(static_cast<long long>(v.size())) : 0;
}

class RecursiveEvaluator {
public:
    long long evaluate(const std::vector<long long>& v) {
        if (v.empty()) return kEmptySequenceS;
        if (auto it = memo_.find(v); it != memo_.end()) return it->second;

        std::size_t i = 0;
        while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
        long long result;
        if (i + 1 == v.size()) {
            result = closed_form(v);
        } else {
            const long long indicator = v[i] + v[i + 1] > 0 ? 1 : 0;
            auto swapped = v;
            std::swap(swapped[i], swapped[i + 1]);
            auto mu = v;
            mu.erase(mu.begin() + static_cast<std::ptrdiff_t>(i), mu.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            result = -evaluate(swapped) + 2 * indicator * (indicator ? evaluate(mu) : 0);
        }
        memo_.emplace(v, result);
        return result;
    }

private:
    std::map<std::vector<long long>, long long> memo_;
};

}  // namespace

RecursionCheck verify_recursion(const WeightVector& lambda, int i, const Caps& caps) {
    const int n = lambda.size();
    if (n < 2) throw InvalidArgument("verify_recursion needs n >= 2");
    if (i < 1 || i > n - 1) throw InvalidArgument("verify_recursion: index must be in [1, n-1]");
    const auto swapped = lambda.swapped(i);
    const auto mu = lambda.without_pair(i);
    const long long indicator = lambda.scaled(i) + lambda.scaled(i + 1) > 0 ? 1 : 0;

    RecursionCheck r;
    r.index = i;
    r.s_lhs = s_direct(lambda, caps) + s_direct(swapped, caps);
    r.s_rhs = 2 * indicator * s_or_convention(mu, caps);
    r.t_lhs = t_direct(lambda, caps) + t_direct(swapped, caps);
    r.t_rhs = 2 * indicator * t_or_convention(mu, caps);
    return r;
}

long long s_recursive(const WeightVector& lambda) {
    const auto values = lambda.scaled_values();
    return RecursiveEvaluator{}.evaluate(std::vector<long long>(values.begin(), values.end()));
}

int seq_a(int i) {
    if (i < 1) throw InvalidArgument("seq_a is defined for i >= 1");
    return parity_sign(binom2(i) + 1);
}

int seq_b(int i) {
    if (i < 0) throw InvalidArgument("seq_b is defined for i >= 0");
    return i >= 2 ? 2 : 1;
}

IdentityCheck composition_identity(int n) {
    if (n < 1 || n > 20) throw InvalidArgument("composition_identity: n must be in [1, 20]");
    IdentityCheck r;
    for_each_composition(n, [&](const Composition& c) {
        long long term = 1;
        for (int part : c.parts) term *= seq_a(part);
        r.lhs += term;
    });
    r.rhs = parity_sign(n) * seq_b(n);
    return r;
}

IdentityCheck interval_sum_identity(int n) {
    if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("interval_sum_identity: n must be in [1, 16]");
    IdentityCheck r;
    // [R(id), id] consists of the ordered partitions of [n] into consecutive intervals.
    const auto id = Permutation::identity(n);
    const Mask positions = full_mask(n - 1);
    for (Mask cuts = 0;; cuts = (cuts - positions) & positions) {
        const auto sigma = face_with_cuts(id, cuts);
        r.lhs += parity_sign(sigma.size()) * sign(g_map(sigma));
        if (cuts == positions) break;
    }
    r.rhs = parity_sign(n) * seq_b(n);
    return r;
}

long long b_stat(const Permutation& tau) {
    long long b = 1;
    for (int part : descent_composition(tau).parts) b *= seq_b(part);
    return b;
}

long long s_decreasing_formula(const WeightVector& lambda, const Caps& caps) {
    if (!lambda.weakly_decreasing()) {
        throw InvalidArgument("s_decreasing_formula: weights are not weakly decreasing");
    }
    if (lambda.empty()) throw InvalidArgument("s_decreasing_formula: empty weight vector");
    long long total = 0;
    for (const auto& tau : enumerate_facets(lambda, caps)) total += sign(tau) * b_stat(tau);
    return parity_sign(lambda.size()) * total;
}

IdentityReport identity_report(const WeightVector& lambda, const Caps& caps) {
    IdentityReport r;
    r.lambda = lambda;
    r.s_direct = s_direct(lambda, caps);
    r.t_direct = t_direct(lambda, caps);
    r.t_pfaffian = t_via_pfaffian(lambda, caps);
    r.s_recursive = s_recursive(lambda);
    return r;
}

}  // namespace coxid
