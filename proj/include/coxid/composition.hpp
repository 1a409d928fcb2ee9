#pragma once

#include <compare>
#include <string>
#include <vector>

namespace coxid {

// A composition (c_1, ..., c_k) of n: positive parts summing to n.
struct Composition {
    std::vector<int> parts;

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Throws InvalidArgument if a part is < 1.
Composition make_composition(std::vector<int> parts);

/// Visits all 2^{n-1} compositions of n (n >= 1).
template <class F>
void for_each_composition(int n, F&& visit) {
    Composition c;
    for (unsigned long long cuts = 0; cuts < (1ULL << (n - 1)); ++cuts) {
        c.parts.clear();
        int run = 1;
        for (int pos = 1; pos < n; ++pos) {
            if (cuts >> (pos - 1) & 1ULL) {
                c.parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.parts.push_back(run);
        visit(static_cast<const Composition&>(c));
    }
}

}  // namespace coxid
