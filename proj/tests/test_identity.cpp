#include <vector>

#include "doctest.h"

#include "coxid/error.hpp"
#include "coxid/identity.hpp"
#include "coxid/pfaffian.hpp"
#include "coxid/random.hpp"
#include "oracles.hpp"

using namespace coxid;

namespace {

std::vector<oracle::Q> as_q(const WeightVector& w) {
    std::vector<oracle::Q> out;
    for (const auto& v : w.values()) out.push_back(v);
    return out;
}

const WeightVector kReference{5, 1, -2, -3};

}  // namespace

TEST_CASE("c1 and c2") {
    CHECK(c1(Rational(1)) == 1);
    CHECK(c1(Rational(0)) == 0);
    CHECK(c1(Rational(-3, 2)) == 0);
    CHECK(c2(1, 2) == 1);
    CHECK(c2(3, -1) == 2);
    CHECK(c2(1, -1) == 0);
    CHECK(c2(-1, 5) == 0);
    CHECK(c2(2, 0) == 2);
    for (long long a = -3; a <= 3; ++a) {
        CHECK(c1_scaled(a) == c1(Rational(a)));
        for (long long b = -3; b <= 3; ++b) CHECK(c2_scaled(a, b) == c2(Rational(a), Rational(b)));
    }
}

TEST_CASE("c of a matching") {
    CHECK(c_of_matching(Matching(2, {{1, 2}}), WeightVector{3, -1}) == 2);
    for (const auto& p : enumerate_maximal_matchings(5)) {
        CHECK(c_of_matching(p, WeightVector{1, 2, 3, 4, 5}) == 1);
        CHECK(c_of_matching(p, WeightVector{0, 2, 3, 4, 5}) == 0);
    }
    CHECK_THROWS_AS(c_of_matching(Matching(2, {{1, 2}}), WeightVector{1, 1, 1}), InvalidArgument);
}

TEST_CASE("T examples") {
    CHECK(t_direct(WeightVector{3, -1}) == 2);
    CHECK(t_direct(WeightVector{1, 2, 3, 4, 5, 6, 7}) == 1);
    CHECK(t_direct(WeightVector{-1, 5, 5}) == 0);
    CHECK(t_via_pfaffian(WeightVector{1}) == 1);
    CHECK(t_via_pfaffian(WeightVector{3, -1}) == 2);
    CHECK(t_via_pfaffian(WeightVector{1, 1, 1, 1}) == 1);
    Caps caps;
    caps.matchings = 4;
    CHECK_THROWS_AS(t_direct(WeightVector{1, 1, 1, 1, 1}, caps), CapExceeded);
    CHECK_THROWS_AS(t_direct_reference(WeightVector{1, 1, 1, 1, 1}, caps), CapExceeded);
}

TEST_CASE("S examples") {
    CHECK(s_direct(WeightVector{1}) == -1);
    CHECK(s_direct(WeightVector{1, 1}) == 1);
    CHECK(s_direct(WeightVector{-1, 1}) == 0);
    CHECK(s_direct(WeightVector{1, -1}) == 0);
    CHECK(s_direct(WeightVector{1, 1, 1}) == -1);
    Caps caps;
    caps.ordered_partitions = 3;
    CHECK_THROWS_AS(s_direct(kReference, caps), CapExceeded);
    CHECK_THROWS_AS(s_direct_reference(kReference, caps), CapExceeded);
    CHECK_THROWS_AS(euler_sum_streaming(kReference, caps), CapExceeded);
}

TEST_CASE("kernels agree with references and the brute-force oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const auto w = random_weights(n, WeightFamily::Any, rng);
        const long long s = s_direct(w);
        const long long t = t_direct(w);
        CHECK(s == s_direct_reference(w));
        CHECK(t == t_direct_reference(w));
        CHECK(s == oracle::S(as_q(w)));
        CHECK(t == oracle::T(as_q(w)));
        CHECK(euler_sum_streaming(w) == oracle::euler(as_q(w)));
    }
}

TEST_CASE("main theorem on the grid, n <= 5") {
    const std::vector<long long> grid = {-2, -1, 0, 1, 2};
    for (int n = 1; n <= 5; ++n) {
        for_each_grid_point(n, grid, [&](const WeightVector& w) {
            const auto r = identity_report(w);
            CHECK(r.pass());
        });
    }
}

TEST_CASE("reverse route") {
    CHECK(reverse_weights(kReference) == WeightVector{-3, -2, 1, 5});
    CHECK(reverse_weights(reverse_weights(kReference)) == kReference);
    CHECK(reverse_weights(WeightVector{1, 2, 1}) == WeightVector{1, 2, 1});
    for (int n = 1; n <= 6; ++n) {
        for_each_grid_point(n, std::vector<long long>{-2, -1, 1, 2}, [&](const WeightVector& w) {
            CHECK(s_via_reverse(w) == s_direct(w));
        });
    }
}

TEST_CASE("increasing closed form") {
    CHECK(s_closed_increasing(WeightVector{1, 2, 3}) == -1);
    CHECK(s_closed_increasing(WeightVector{0, 1, 2}) == 0);
    CHECK(s_closed_increasing(WeightVector{-5, 1, 100}) == 0);
    CHECK_THROWS_AS(s_closed_increasing(WeightVector{2, 1}), InvalidArgument);
    CHECK_THROWS_AS(s_closed_increasing(WeightVector{}), InvalidArgument);
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const auto w = random_weights(n, WeightFamily::WeaklyIncreasing, rng);
        CHECK(s_closed_increasing(w) == s_direct(w));
    }
}

TEST_SUITE("pfaffian") {
    TEST_CASE("examples") {
        SkewMatrix two(2);
        two.set(1, 2, 7);
        CHECK(pfaffian(two) == 7);
        CHECK(two.at(2, 1) == -7);
        CHECK(two.at(1, 1) == 0);
        SkewMatrix ones(4);
        for (int i = 1; i <= 4; ++i) {
            for (int j = i + 1; j <= 4; ++j) ones.set(i, j, 1);
        }
        CHECK(pfaffian(ones) == 1);
        CHECK(pfaffian(SkewMatrix(6)) == 0);
        CHECK(pfaffian(SkewMatrix(0)) == 1);
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(pfaffian(SkewMatrix(3)), InvalidArgument);
        CHECK_THROWS_AS(SkewMatrix(-1), InvalidArgument);
        CHECK_THROWS_AS(SkewMatrix(17), InvalidArgument);
        SkewMatrix a(4);
        CHECK_THROWS_AS(a.set(2, 1, 1), InvalidArgument);
        CHECK_THROWS_AS(a.set(1, 5, 1), InvalidArgument);
        Caps caps;
        caps.pfaffian_order = 4;
        CHECK_THROWS_AS(pfaffian(SkewMatrix(6), caps), CapExceeded);
    }

    TEST_CASE("row expansion oracle and Pf^2 = det") {
        Rng rng(9);
        for (int trial = 0; trial < 200; ++trial) {
            const int order = 2 * (1 + static_cast<int>(rng.below(4)));
            SkewMatrix a(order);
            for (int i = 1; i <= order; ++i) {
                for (int j = i + 1; j <= order; ++j) a.set(i, j, rng.uniform(-3, 3));
            }
            const long long pf = pfaffian(a);
            CHECK(pf == oracle::pfaffian(a.dense()));
            CHECK(pf * pf == determinant(a.dense()));
            if (order <= 6) CHECK(determinant(a.dense()) == oracle::determinant(a.dense()));
        }
        CHECK(determinant({}) == 1);
        CHECK(determinant({{2, 1}, {1, 1}}) == 1);
        CHECK(determinant({{0, 1}, {1, 0}}) == -1);
        CHECK_THROWS_AS(determinant({{1, 2}}), InvalidArgument);
    }

    TEST_CASE("T matrix") {
        const auto a = t_matrix(WeightVector{1, -1, 2});
        CHECK(a.order() == 4);
        CHECK(a.at(1, 2) == 0);
        CHECK(a.at(1, 3) == 1);
        CHECK(a.at(2, 4) == 0);
        CHECK(a.at(3, 4) == 1);
        CHECK_THROWS_AS(t_matrix(WeightVector{}), InvalidArgument);
    }
}

TEST_SUITE("recursion") {
    TEST_CASE("examples") {
        const auto r = verify_recursion(WeightVector{1, 1}, 1);
        CHECK(r.s_lhs == 2);
        CHECK(r.s_rhs == 2);
        CHECK(r.t_lhs == 2);
        CHECK(r.t_rhs == 2);
        const auto off = verify_recursion(WeightVector{1, -1, 3}, 1);
        CHECK(off.s_rhs == 0);
        CHECK(off.t_rhs == 0);
        CHECK(off.holds());
        CHECK(verify_recursion(kReference, 2).holds());
        CHECK_THROWS_AS(verify_recursion(WeightVector{1}, 1), InvalidArgument);
        CHECK_THROWS_AS(verify_recursion(kReference, 0), InvalidArgument);
        CHECK_THROWS_AS(verify_recursion(kReference, 4), InvalidArgument);
    }

    TEST_CASE("the S identity carries a plus sign") {
        const auto r = verify_recursion(WeightVector{1, 1, 1}, 1);
        CHECK(r.s_lhs == -2);
        CHECK(r.s_rhs == -2);
        CHECK(s_direct(WeightVector{1}) == -1);
    }

    TEST_CASE("both identities on random weights") {
        Rng rng(13);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(5));
            const auto w = random_weights(n, WeightFamily::Any, rng);
            for (int i = 1; i < n; ++i) CHECK(verify_recursion(w, i).holds());
        }
    }

    TEST_CASE("recursive evaluator") {
        CHECK(s_recursive(WeightVector{1, -1}) == 0);
        CHECK(s_recursive(WeightVector{1, 2, 3}) == -1);
        CHECK(s_recursive(kReference) == s_direct(kReference));
        CHECK(s_recursive(WeightVector{}) == kEmptySequenceS);
        Rng rng(15);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(7));
            const auto w = random_weights(n, WeightFamily::Any, rng);
            CHECK(s_recursive(w) == s_direct(w));
        }
        // Beyond face enumeration the recursion still agrees with the Pfaffian route.
        const auto big = random_weights(14, WeightFamily::Any, rng);
        CHECK(s_recursive(big) == t_via_pfaffian(big));
    }
}

TEST_SUITE("decreasing weights") {
    TEST_CASE("sequences") {
        CHECK(seq_a(1) == -1);
        CHECK(seq_a(2) == 1);
        CHECK(seq_a(4) == -1);
        CHECK(seq_b(0) == 1);
        CHECK(seq_b(1) == 1);
        CHECK(seq_b(5) == 2);
        CHECK_THROWS_AS(seq_a(0), InvalidArgument);
        CHECK_THROWS_AS(seq_b(-1), InvalidArgument);
    }

    TEST_CASE("composition and interval identities") {
        CHECK(composition_identity(1).lhs == -1);
        CHECK(composition_identity(2).lhs == 2);
        CHECK(composition_identity(3).lhs == -2);
        CHECK(interval_sum_identity(1).lhs == -1);
        CHECK(interval_sum_identity(2).lhs == 2);
        CHECK(interval_sum_identity(4).lhs == 2);
        for (int n = 1; n <= 12; ++n) {
            CHECK(composition_identity(n).holds());
            CHECK(interval_sum_identity(n).holds());
        }
        CHECK_THROWS_AS(composition_identity(0), InvalidArgument);
        CHECK_THROWS_AS(composition_identity(21), InvalidArgument);
        CHECK_THROWS_AS(interval_sum_identity(0), InvalidArgument);
    }

    TEST_CASE("b statistic") {
        CHECK(b_stat(Permutation::longest(5)) == 1);
        CHECK(b_stat(Permutation::identity(4)) == 2);
        CHECK(b_stat(Permutation({1, 3, 2, 4})) == 4);
    }

    TEST_CASE("decreasing formula") {
        CHECK(s_decreasing_formula(WeightVector{1, 1}) == 1);
        CHECK(s_decreasing_formula(kReference) == s_direct(kReference));
        CHECK(s_decreasing_formula(WeightVector{-1, -2}) == 0);
        CHECK_THROWS_AS(s_decreasing_formula(WeightVector{1, 2}), InvalidArgument);
        Rng rng(19);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(7));
            const auto w = random_weights(n, WeightFamily::WeaklyDecreasing, rng);
            CHECK(s_decreasing_formula(w) == s_direct(w));
        }
    }
}
