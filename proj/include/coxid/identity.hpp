#pragma once

#include <string>
#include <vector>

#include "coxid/caps.hpp"
#include "coxid/matching.hpp"
#include "coxid/ordered_partition.hpp"
#include "coxid/pfaffian.hpp"
#include "coxid/weights.hpp"

namespace coxid {

// Values used for the empty weight sequence: the empty ordered partition with
// no blocks for S, the empty matching for T. Both recursions close up at n = 2.
inline constexpr long long kEmptySequenceS = 1;
inline constexpr long long kEmptySequenceT = 1;

/// 1 if a > 0, else 0.
int c1(const Rational& a);
int c1_scaled(long long a);

/// 1 if a, b > 0; 2 if a > -b >= 0; 0 otherwise.
int c2(const Rational& a, const Rational& b);
int c2_scaled(long long a, long long b);

/// Product over edges {i<j} of c2(lambda_i, lambda_j), times c1 at the isolated vertex.
long long c_of_matching(const Matching& p, const WeightVector& lambda);

// Matching side: T(lambda) = sum over maximal matchings of (-1)^p c(p, lambda).

/// OpenMP kernel: shards on the partner of vertex 1, tracks crossing parity incrementally.
long long t_direct(const WeightVector& lambda, const Caps& caps = {});
/// Reference: enumerate_maximal_matchings with matching_sign and c_of_matching.
long long t_direct_reference(const WeightVector& lambda, const Caps& caps = {});

// Face side: S(lambda) = sum over faces of Sigma(lambda) of (-1)^{|sigma|} (-1)^{g(sigma)}.

/// OpenMP kernel: depth-first search over positive prefixes, sharded on the first block.
long long s_direct(const WeightVector& lambda, const Caps& caps = {});
/// Reference: filters every ordered partition through in_P and takes sign(g_map(sigma)).
long long s_direct_reference(const WeightVector& lambda, const Caps& caps = {});

/// Sum over faces of (-1)^{|sigma|}, streamed without materializing the complex.
long long euler_sum_streaming(const WeightVector& lambda, const Caps& caps = {});

/// The skew matrix whose Pfaffian is T(lambda): A_{i,j} = c2(lambda_i, lambda_j) for
/// i < j <= n, plus a column c1(lambda_i) at j = n+1 when n is odd.
SkewMatrix t_matrix(const WeightVector& lambda);
long long t_via_pfaffian(const WeightVector& lambda, const Caps& caps = {});

/// (-1)^n if lambda_1 > 0, else 0. Throws InvalidArgument unless lambda is weakly increasing.
long long s_closed_increasing(const WeightVector& lambda);

WeightVector reverse_weights(const WeightVector& lambda);

/// (-1)^{C(n,2)} times the sum over faces of Sigma(reverse(lambda)) of
/// (-1)^{|sigma|} (-1)^{f(sigma)}; another route to S(lambda).
long long s_via_reverse(const WeightVector& lambda, const Caps& caps = {});

struct RecursionCheck {
    int index = 0;
    long long s_lhs = 0, s_rhs = 0;  // S(lambda) + S(s_i lambda)  vs   2 [..] S(mu)
    long long t_lhs = 0, t_rhs = 0;  // T(lambda) + T(s_i lambda)  vs   2 [..] T(mu)
    bool s_holds() const { return s_lhs == s_rhs; }
    bool t_holds() const { return t_lhs == t_rhs; }
    bool holds() const { return s_holds() && t_holds(); }
};

/// Both two-term recursions at position i, with mu = lambda minus positions i, i+1.
/// Throws InvalidArgument unless 1 <= i <= n-1.
RecursionCheck verify_recursion(const WeightVector& lambda, int i, const Caps& caps = {});

/// S(lambda) via the recursion: bubble-sorts toward weakly increasing order using
/// S(lambda) = -S(s_i lambda) + 2 [lambda_i + lambda_{i+1} > 0] S(mu), closing
/// with the weakly increasing closed form. No faces are enumerated.
long long s_recursive(const WeightVector& lambda);

/// a_i = (-1)^{C(i,2)+1}, i >= 1.
int seq_a(int i);
/// b_0 = b_1 = 1, b_i = 2 for i >= 2.
int seq_b(int i);

struct IdentityCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool holds() const { return lhs == rhs; }
};

/// Sum over compositions of n of a_{c_1} ... a_{c_k}, against (-1)^n b_n.
IdentityCheck composition_identity(int n);

/// Sum over [R(id), id] of (-1)^{|sigma|} (-1)^{g(sigma)}, against (-1)^n b_n.
IdentityCheck interval_sum_identity(int n);

/// Product of b_{c_i} over the descent composition of tau.
long long b_stat(const Permutation& tau);

/// (-1)^n times the sum over tau in A(lambda) of (-1)^tau b(tau).
/// Throws InvalidArgument unless lambda is weakly decreasing.
long long s_decreasing_formula(const WeightVector& lambda, const Caps& caps = {});

/// S and T by every route, with the agreement verdicts.
struct IdentityReport {
    WeightVector lambda;
    long long s_direct = 0;
    long long t_direct = 0;
    long long t_pfaffian = 0;
    long long s_recursive = 0;

    long long expected_s() const { return (lambda.size() % 2 ? -1 : 1) * t_direct; }
    bool main_theorem() const { return s_direct == expected_s(); }
    bool pfaffian_route() const { return t_pfaffian == t_direct; }
    bool recursive_route() const { return s_recursive == s_direct; }
    bool pass() const { return main_theorem() && pfaffian_route() && recursive_route(); }
};

IdentityReport identity_report(const WeightVector& lambda, const Caps& caps = {});

}  // namespace coxid
