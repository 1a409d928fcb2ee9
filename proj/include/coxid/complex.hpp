#pragma once

#include <string>
#include <vector>

#include "coxid/caps.hpp"
#include "coxid/ordered_partition.hpp"
#include "coxid/permutation.hpp"
#include "coxid/weights.hpp"

namespace coxid {

/// The weighted complex Sigma(lambda).
///
/// `faces` is P(lambda): ordered partitions whose prefix block sums are all
/// strictly positive, listed in enumeration order (block count, then blocks
/// lexicographically). A face with k blocks has dimension k - 2, so ([n]) is
/// the empty face. `facets` is A(lambda), the all-singleton faces, read as
/// permutations in lexicographic order. When lambda_[n] <= 0 both are empty:
/// the complex has no faces at all, not even the empty one.
struct WeightedComplex {
    WeightVector lambda;
    std::vector<OrderedPartition> faces;
    std::vector<Permutation> facets;

    int ground_size() const { return lambda.size(); }
    bool empty() const { return faces.empty(); }

    friend bool operator==(const WeightedComplex&, const WeightedComplex&) = default;
};

enum class Topology { Empty, Ball, Sphere };

struct Classification {
    Topology topology = Topology::Empty;
    int dimension = -1;  // n - 2 for balls and spheres

    std::string to_string() const;  // "Sphere(1)", "Ball(2)", "Empty"
    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Enumeration order on ordered partitions: block count, then blocks compared
/// lexicographically by their sorted element lists.
bool enumeration_less(const OrderedPartition& a, const OrderedPartition& b);

/// Every prefix sum lambda_{C_1} + ... + lambda_{C_j} is strictly positive.
bool in_P(const WeightVector& lambda, const OrderedPartition& sigma);

/// Every prefix sum lambda_{tau_1} + ... + lambda_{tau_j} is strictly positive.
bool in_A(const WeightVector& lambda, const Permutation& tau);

/// Materializes Sigma(lambda); shards the enumeration across OpenMP threads by block count.
WeightedComplex build_complex(const WeightVector& lambda, const Caps& caps = {});

/// Single-threaded reference: filters the full ordered-partition stream through in_P.
WeightedComplex build_complex_serial(const WeightVector& lambda, const Caps& caps = {});

/// A(lambda) in lexicographic order, by depth-first search over positive prefixes.
std::vector<Permutation> enumerate_facets(const WeightVector& lambda, const Caps& caps = {});

/// Splits off the element of block j with the largest weight (smallest element
/// on ties): (C_1, ..., {a}, C_j - {a}, ...). The result stays in P(lambda).
OrderedPartition split_max(const OrderedPartition& sigma, int j, const WeightVector& lambda);

/// Splits block j into (B, C_j - B) when lambda_B > 0, else (C_j - B, B).
OrderedPartition split_block(const OrderedPartition& sigma, int j, Mask b, const WeightVector& lambda);

/// A facet below sigma, from split_max on the leftmost non-singleton block until none remain.
Permutation facet_below(const OrderedPartition& sigma, const WeightVector& lambda);

/// (f_{-1}, f_0, ..., f_{n-2}): entry k-1 counts faces with k blocks.
std::vector<long long> f_vector(const WeightedComplex& c);

/// Sum over faces of (-1)^{|sigma|}.
long long euler_sum(const WeightedComplex& c);

/// (-1)^n when every lambda_i > 0, else 0.
long long euler_closed_form(const WeightVector& lambda);

Classification classify(const WeightVector& lambda);
Classification classify(const WeightedComplex& c);

/// The complex with every face relabeled by tau; equals build_complex(tau(lambda)).
WeightedComplex relabel(const Permutation& tau, const WeightedComplex& c);

}  // namespace coxid
