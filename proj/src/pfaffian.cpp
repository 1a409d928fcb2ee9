#include "coxid/pfaffian.hpp"

#include "coxid/bits.hpp"
#include "coxid/error.hpp"

namespace coxid {

SkewMatrix::SkewMatrix(int order) : order_(order) {
    if (order < 0 || order > kMaxGroundSet) throw InvalidArgument("skew matrix order must be in [0, 16]");
    upper_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
}

std::size_t SkewMatrix::slot(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j - 1);
}

long long SkewMatrix::at(int i, int j) const {
    if (i < 1 || j < 1 || i > order_ || j > order_) throw InvalidArgument("skew matrix index out of range");
    if (i == j) return 0;
    return i < j ? upper_[slot(i, j)] : -upper_[slot(j, i)];
}

void SkewMatrix::set(int i, int j, long long value) {
    if (i < 1 || j > order_ || i >= j) throw InvalidArgument("set needs 1 <= i < j <= order");
    upper_[slot(i, j)] = value;
}

std::vector<std::vector<long long>> SkewMatrix::dense() const {
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(order_),
                                          std::vector<long long>(static_cast<std::size_t>(order_)));
    for (int i = 1; i <= order_; ++i)
        for (int j = 1; j <= order_; ++j) m[i - 1][j - 1] = at(i, j);
    return m;
}

namespace {

// Expansion along the smallest unmatched index a; pairing a with b crosses every
// earlier edge whose right end lies strictly between a and b.
long long expand(const SkewMatrix& a, Mask unmatched, Mask matched) {
    if (unmatched == 0) return 1;
    const int i = lowest_element(unmatched);
    const Mask rest = unmatched & ~element_bit(i);
    long long total = 0;
    for_each_element(rest, [&](int j) {
        const long long entry = a.at(i, j);
        if (entry == 0) return;
        const int sign = parity_sign(popcount(matched & between(i, j)));
        const Mask now = matched | element_bit(i) | element_bit(j);
        total += sign * entry * expand(a, rest & ~element_bit(j), now);
    });
    return total;
}

}  // namespace

long long pfaffian(const SkewMatrix& a, const Caps& caps) {
    if (a.order() % 2 != 0) throw InvalidArgument("Pfaffian needs an even order");
    require_cap(a.order(), caps.pfaffian_order, "pfaffian");
    return expand(a, full_mask(a.order()), 0);
}

long long determinant(std::vector<std::vector<long long>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw InvalidArgument("determinant needs a square matrix");
    int sign = 1;
    __int128 prev = 1;
    std::vector<std::vector<__int128>> w(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = m[i][j];
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && w[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(w[k], w[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
            }
        }
        prev = w[k][k];
    }
    return sign * static_cast<long long>(w[n - 1][n - 1]);
}

}  // namespace coxid
