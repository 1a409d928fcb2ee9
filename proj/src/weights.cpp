#include "coxid/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "coxid/error.hpp"

namespace coxid {

namespace mp = boost::multiprecision;

namespace {

// Keeps every subset sum of up to 16 entries inside int64.
constexpr long long kScaledLimit = 1LL << 58;

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

long long checked_int64(const mp::cpp_int& v) {
    if (mp::abs(v) > kScaledLimit) {
        throw InvalidArgument("weights too large for exact int64 arithmetic");
    }
    return v.convert_to<long long>();
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.find_first_of(".eE") != std::string_view::npos) {
        throw ParseError("'" + std::string(text) +
                         "' looks like floating point; weights must be exact integers or p/q fractions");
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const auto num = s.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("cannot parse '" + std::string(text) + "' as an integer or p/q fraction");
    }
    const mp::cpp_int p{std::string(num)};
    const mp::cpp_int q{std::string(den)};
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    const auto num = mp::numerator(r);
    const auto den = mp::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

WeightVector::WeightVector(std::span<const Rational> values) {
    if (values.size() > static_cast<std::size_t>(kMaxGroundSet)) {
        throw InvalidArgument("at most 16 weights are supported");
    }
    mp::cpp_int common = 1;
    for (const auto& v : values) common = mp::lcm(common, mp::denominator(v));
    std::vector<long long> scaled;
    scaled.reserve(values.size());
    for (const auto& v : values) {
        scaled.push_back(checked_int64(mp::numerator(v) * (common / mp::denominator(v))));
    }
    *this = from_scaled(std::move(scaled), checked_int64(common));
}

WeightVector::WeightVector(std::initializer_list<long long> integers)
    : WeightVector(from_integers(std::span<const long long>(integers.begin(), integers.size()))) {}

WeightVector WeightVector::from_integers(std::span<const long long> integers) {
    return from_scaled(std::vector<long long>(integers.begin(), integers.end()), 1);
}

WeightVector WeightVector::parse(std::string_view text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        values.push_back(parse_rational(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (values.size() > static_cast<std::size_t>(kMaxGroundSet)) {
        throw ParseError("at most 16 weights are supported");
    }
    return WeightVector(values);
}

WeightVector WeightVector::from_scaled(std::vector<long long> numerators, long long denominator) {
    if (denominator <= 0) throw InvalidArgument("denominator must be positive");
    if (numerators.size() > static_cast<std::size_t>(kMaxGroundSet)) {
        throw InvalidArgument("at most 16 weights are supported");
    }
    long long g = denominator;
    for (long long v : numerators) {
        if (v > kScaledLimit || v < -kScaledLimit) throw InvalidArgument("weights too large for exact int64 arithmetic");
        g = std::gcd(g, v);
    }
    WeightVector w;
    for (long long& v : numerators) v /= g;
    w.scaled_ = std::move(numerators);
    w.denominator_ = denominator / g;
    return w;
}

Rational WeightVector::operator[](int i) const {
    if (i < 1 || i > size()) throw InvalidArgument("weight index out of range");
    return Rational(scaled_[i - 1], denominator_);
}

std::vector<Rational> WeightVector::values() const {
    std::vector<Rational> out;
    for (int i = 1; i <= size(); ++i) out.push_back((*this)[i]);
    return out;
}

long long WeightVector::scaled_sum(Mask subset) const {
    long long s = 0;
    for_each_element(subset, [&](int e) { s += scaled_[e - 1]; });
    return s;
}

Rational WeightVector::subset_weight(Mask subset) const { return Rational(scaled_sum(subset), denominator_); }

std::string WeightVector::to_string() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out += ',';
        out += coxid::to_string((*this)[i]);
    }
    return out;
}

WeightVector WeightVector::swapped(int i) const {
    if (i < 1 || i >= size()) throw InvalidArgument("swap index out of range");
    auto v = scaled_;
    std::swap(v[i - 1], v[i]);
    return from_scaled(std::move(v), denominator_);
}

WeightVector WeightVector::without_pair(int i) const {
    if (i < 1 || i >= size()) throw InvalidArgument("pair index out of range");
    auto v = scaled_;
    v.erase(v.begin() + (i - 1), v.begin() + (i + 1));
    return from_scaled(std::move(v), denominator_);
}

WeightVector WeightVector::reversed() const {
    return from_scaled(std::vector<long long>(scaled_.rbegin(), scaled_.rend()), denominator_);
}

WeightVector WeightVector::permuted(const Permutation& tau) const {
    if (tau.size() != size()) throw InvalidArgument("permutation size does not match weights");
    return from_scaled(tau.act(std::span<const long long>(scaled_)), denominator_);
}

bool WeightVector::weakly_increasing() const { return std::is_sorted(scaled_.begin(), scaled_.end()); }

bool WeightVector::weakly_decreasing() const {
    return std::is_sorted(scaled_.begin(), scaled_.end(), std::greater<>());
}

bool WeightVector::all_positive() const {
    return std::all_of(scaled_.begin(), scaled_.end(), [](long long v) { return v > 0; });
}

bool WeightVector::distinct_entries() const {
    auto v = scaled_;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::vector<long long> subset_sum_table(const WeightVector& lambda) {
    const int n = lambda.size();
    std::vector<long long> table(std::size_t{1} << n, 0);
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        const int e = lowest_element(s);
        table[s] = table[s & (s - 1)] + lambda.scaled(e);
    }
    return table;
}

Permutation decreasing_sort_permutation(const WeightVector& lambda) {
    const int n = lambda.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return lambda.scaled(a) > lambda.scaled(b); });
    // order[r] is the element that lands in position r+1, so tau(order[r]) = r+1.
    std::vector<int> tau(n);
    for (int r = 0; r < n; ++r) tau[order[r] - 1] = r + 1;
    return Permutation(tau);
}

std::optional<WeightVector> perturb_to_distinct(const WeightVector& lambda) {
    const int n = lambda.size();
    const auto sums = subset_sum_table(lambda);
    for (std::size_t s = 1; s < sums.size(); ++s)
        if (sums[s] == 0) return std::nullopt;
    // eps = 1/M in scaled units: i*eps summed over any subset stays below 1 <= |lambda_S|.
    const long long m = static_cast<long long>(n) * (n + 1) / 2 + 1;
    std::vector<long long> v;
    for (int i = 1; i <= n; ++i) v.push_back(lambda.scaled(i) * m + i);
    return WeightVector::from_scaled(std::move(v), lambda.denominator() * m);
}

}  // namespace coxid
