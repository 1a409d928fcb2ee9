#pragma once

#include <vector>

#include "coxid/caps.hpp"

namespace coxid {

/// Integer skew-symmetric matrix stored by its strict upper triangle.
class SkewMatrix {
public:
    explicit SkewMatrix(int order);

    int order() const { return order_; }

    /// A_{i,j} for 1-based i, j; A_{j,i} = -A_{i,j} and A_{i,i} = 0.
    long long at(int i, int j) const;
    /// Sets A_{i,j} (i < j) and implicitly A_{j,i}.
    void set(int i, int j, long long value);

    std::vector<std::vector<long long>> dense() const;

private:
    std::size_t slot(int i, int j) const;

    int order_;
    std::vector<long long> upper_;
};

/// Signed perfect-matching expansion: sum over matchings of (-1)^crossings times
/// the product of A_{i,j} over edges i < j. Order 0 gives 1.
/// Throws InvalidArgument for odd order and CapExceeded beyond caps.pfaffian_order.
long long pfaffian(const SkewMatrix& a, const Caps& caps = {});

/// Exact determinant by fraction-free (Bareiss) elimination.
long long determinant(std::vector<std::vector<long long>> m);

}  // namespace coxid
