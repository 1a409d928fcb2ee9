// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "coxid/complex.hpp"
#include "coxid/cube_poset.hpp"
#include "coxid/homology.hpp"
#include "coxid/identity.hpp"
#include "coxid/matching.hpp"
#include "coxid/random.hpp"
#include "coxid/shelling.hpp"
#include "oracles.hpp"

using namespace coxid;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<long long> kGrid = {-2, -1, 1, 2};

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty()) first_failure_ = what;
        }
    }
    Outcome outcome(std::string summary) const {
        std::ostringstream out;
        out << summary << "; " << checks_ << " checks, " << failures_ << " failures";
        if (!first_failure_.empty()) out << "; first: " << first_failure_;
        return {failures_ == 0, out.str()};
    }
    std::size_t failures() const { return failures_; }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_failure_;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
void grid_cases(int n_lo, int n_hi, F&& visit) {
    for (int n = n_lo; n <= n_hi; ++n) for_each_grid_point(n, kGrid, visit);
}

// 1 ------------------------------------------------------------------------
Outcome reference_complex() {
    const WeightVector lambda{5, 1, -2, -3};
    const auto start = Clock::now();
    const auto c = build_complex(lambda);
    const auto f = f_vector(c);
    const auto cls = classify(c);
    const long long euler = euler_sum(c);
    const double ms = seconds_since(start) * 1e3;
    Tally t;
    t.expect(f == std::vector<long long>{1, 7, 12, 6}, "f-vector");
    t.expect(cls.to_string() == "Ball(2)", "classification " + cls.to_string());
    t.expect(euler == 0, "euler sum");
    t.expect(ms < 10.0, "runtime");
    char buf[96];
    std::snprintf(buf, sizeof buf, "f=(1,7,12,6) Ball(2) euler 0 in %.3f ms (limit 10 ms)", ms);
    return t.outcome(buf);
}

// 2 ------------------------------------------------------------------------
Outcome exhaustive_main_theorem() {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    Tally t;
    std::size_t cases = 0;
    const auto start = Clock::now();
    grid_cases(1, 6, [&](const WeightVector& w) {
        ++cases;
        const long long s = s_direct(w);
        const long long expected = parity_sign(w.size()) * t_direct(w);
        t.expect(s == expected, w.to_string());
    });
    const double secs = seconds_since(start);
    omp_set_num_threads(saved);
    t.expect(cases == 5460, "case count");
    t.expect(secs < 60.0, "runtime");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu cases on {-2,-1,1,2}^n, n=1..6, single thread, %.2f s (limit 60 s)", cases,
                  secs);
    return t.outcome(buf);
}

// 3 ------------------------------------------------------------------------
Outcome randomized_routes() {
    Tally t;
    const auto start = Clock::now();
    for (int n : {7, 8}) {
        Rng rng(7000 + static_cast<std::uint64_t>(n));
        std::vector<WeightVector> population;
        for (int i = 0; i < 10000; ++i) population.push_back(random_weights(n, WeightFamily::Any, rng));
        std::vector<char> ok(population.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(population.size()); ++i) {
            const auto& w = population[static_cast<std::size_t>(i)];
            const long long s = s_direct(w);
            const long long sign_n = parity_sign(n);
            ok[static_cast<std::size_t>(i)] =
                s == sign_n * t_direct(w) && s == sign_n * t_via_pfaffian(w) && s == s_recursive(w);
        }
        for (std::size_t i = 0; i < ok.size(); ++i) t.expect(ok[i], population[i].to_string());
    }
    const double secs = seconds_since(start);
    t.expect(secs < 600.0, "runtime");
    char buf[128];
    std::snprintf(buf, sizeof buf, "2 x 10^4 seeded rational weights, n=7,8, four routes, %.1f s (limit 600 s)", secs);
    return t.outcome(buf);
}

// 4 ------------------------------------------------------------------------
Outcome euler_corollary() {
    Tally t;
    grid_cases(1, 6, [&](const WeightVector& w) {
        t.expect(euler_sum(build_complex(w)) == euler_closed_form(w), w.to_string());
    });
    return t.outcome("closed form against euler_sum on {-2,-1,1,2}^n, n=1..6");
}

// 5 ------------------------------------------------------------------------
Outcome base_cases() {
    Tally t;
    Rng rng(5005);
    for (int i = 0; i < 100; ++i) {
        const auto w = random_weights(1 + static_cast<int>(rng.below(10)), WeightFamily::AllPositive, rng);
        t.expect(t_direct(w) == 1, "T=1 at " + w.to_string());
    }
    for (int i = 0; i < 100; ++i) {
        const auto w = random_weights(1 + static_cast<int>(rng.below(10)), WeightFamily::FirstNonpositive, rng);
        t.expect(t_direct(w) == 0, "T=0 at " + w.to_string());
    }
    for (int i = 0; i < 100; ++i) {
        const auto w = random_weights(1 + static_cast<int>(rng.below(8)), WeightFamily::WeaklyIncreasing, rng);
        t.expect(s_direct(w) == s_closed_increasing(w), "increasing at " + w.to_string());
    }
    return t.outcome("T=1 all positive (n<=10), T=0 first entry <= 0 (n<=10), increasing closed form (n<=8)");
}

// 6 ------------------------------------------------------------------------
Outcome recursion() {
    Tally t;
    Rng rng(6006);
    std::size_t positions = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const auto w = random_weights(n, WeightFamily::Any, rng);
        for (int k = 1; k < n; ++k) {
            const auto r = verify_recursion(w, k);
            ++positions;
            t.expect(r.s_holds(), "S identity at " + w.to_string() + " i=" + std::to_string(k));
            t.expect(r.t_holds(), "T identity at " + w.to_string() + " i=" + std::to_string(k));
        }
    }
    return t.outcome("1000 random weights, n=2..8, " + std::to_string(positions) + " positions, both identities");
}

// 7 ------------------------------------------------------------------------
Outcome shelling() {
    Tally t;
    Rng rng(7007);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const auto w = random_weights(n, WeightFamily::WeaklyDecreasing, rng);
        const auto c = build_complex(w);
        for (int s = 0; s < 50; ++s) {
            const auto order = restrict_order(random_weak_bruhat_linear_extension(n, rng), c.facets);
            const auto check = verify_shelling(c, order);
            std::vector<oracle::Perm> lines;
            for (const auto& p : order) lines.push_back(p.one_line());
            t.expect(check.is_shelling && check.consistent(), "extension at " + w.to_string());
            t.expect(oracle::first_non_shelling_index(n, lines) < 0, "oracle at " + w.to_string());
        }
    }
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const auto w = random_weights(n, WeightFamily::DistinctPositiveSum, rng);
        t.expect(el_labeling_verify(w).ok, "EL at " + w.to_string());
        const auto c = build_complex(w);
        const auto order = lexicographic_order(w, c.facets);
        t.expect(verify_shelling(c, order).is_shelling, "lex order at " + w.to_string());
    }
    return t.outcome("50 decreasing weights x 50 sampled extensions (n<=5); 50 distinct weights EL + lex (n<=6); sampled");
}

// 8 ------------------------------------------------------------------------
Outcome topology() {
    Tally t;
    grid_cases(3, 5, [&](const WeightVector& w) {
        const auto c = build_complex(w);
        const auto betti = homology_gf2(c);
        std::vector<long long> expected(static_cast<std::size_t>(w.size()), 0);
        const auto cls = classify(c);
        if (cls.topology == Topology::Sphere) expected.back() = 1;
        t.expect(betti == expected, w.to_string());
        t.expect(cls == classify(w), "classify routes at " + w.to_string());
    });
    return t.outcome("GF(2) reduced Betti numbers against classify on {-2,-1,1,2}^n, n=3..5");
}

// 9 ------------------------------------------------------------------------
Outcome decreasing_suite() {
    Tally t;
    for (int n = 1; n <= 12; ++n) {
        t.expect(composition_identity(n).holds(), "composition n=" + std::to_string(n));
        t.expect(interval_sum_identity(n).holds(), "interval n=" + std::to_string(n));
    }
    Rng rng(9009);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng.below(8));
        auto w = random_weights(n, i % 2 ? WeightFamily::WeaklyDecreasing : WeightFamily::Any, rng);
        w = w.permuted(decreasing_sort_permutation(w));
        t.expect(w.weakly_decreasing(), "sorted " + w.to_string());
        t.expect(s_decreasing_formula(w) == s_direct(w), w.to_string());
    }
    return t.outcome("composition and interval identities n=1..12; decreasing formula on 500 weights, any sign of the sum (n<=8)");
}

// 10 -----------------------------------------------------------------------
Outcome structural() {
    Tally t;
    // Interval decomposition of the full Coxeter complex and of decreasing weights.
    for (int n = 1; n <= 7; ++n) {
        const auto ones = WeightVector::from_integers(std::vector<long long>(static_cast<std::size_t>(n), 1));
        try {
            const auto cert = decomposition(build_complex(ones));
            t.expect(cert.homology_facets.size() == 1, "homology facet count n=" + std::to_string(n));
        } catch (const std::exception& e) {
            t.expect(false, e.what());
        }
    }
    Rng rng(1010);
    for (int i = 0; i < 100; ++i) {
        const auto w = random_weights(1 + static_cast<int>(rng.below(7)), WeightFamily::WeaklyDecreasing, rng);
        try {
            decomposition(build_complex(w));
            t.expect(true, "");
        } catch (const std::exception& e) {
            t.expect(false, w.to_string() + ": " + e.what());
        }
    }
    // Purity, n <= 7.
    for (int n = 1; n <= 7; ++n) {
        const std::vector<long long> grid = n == 7 ? std::vector<long long>{-1, 2} : kGrid;
        for_each_grid_point(n, grid, [&](const WeightVector& w) {
            const auto c = build_complex(w);
            bool pure = true;
            for (const auto& s : c.faces) {
                const auto top = facet_below(s, w);
                pure = pure && std::binary_search(c.facets.begin(), c.facets.end(), top) &&
                       refines(OrderedPartition::singletons(top), s);
            }
            t.expect(pure, "purity at " + w.to_string());
        });
    }
    // Lower ideal for decreasing weights, n <= 6.
    grid_cases(1, 6, [&](const WeightVector& w) {
        if (!w.weakly_decreasing()) return;
        const auto facets = enumerate_facets(w);
        for (const auto& tau : facets) {
            for (const auto& down : weak_bruhat_lower_covers(tau)) {
                t.expect(std::binary_search(facets.begin(), facets.end(), down), "lower ideal at " + w.to_string());
            }
        }
    });
    // Sign relation between f and g, n <= 7.
    for (int n = 1; n <= 7; ++n) {
        for_each_ordered_partition(n, Caps{}, [&](const OrderedPartition& s) {
            long long e = 0;
            for (int c : op_type(s).parts) e += binom2(c);
            t.expect(sign(g_map(s)) == parity_sign(e) * sign(f_map(s)), "sign relation at " + s.label());
        });
    }
    // S** bijection and matching lift, n <= 9.
    for (int n = 1; n <= 9; ++n) {
        std::set<Matching> image;
        for (const auto& tau : all_permutations(n)) {
            if (!is_sstar(tau)) continue;
            const auto p = sstar_to_matching(tau);
            t.expect(sign(tau) == matching_sign(p) && matching_to_sstar(p) == tau, "S** at " + tau.to_string());
            image.insert(p);
        }
        t.expect(image.size() == maximal_matching_count(n), "S** onto n=" + std::to_string(n));
        if (n % 2) {
            std::set<Matching> lifted;
            for (const auto& p : enumerate_maximal_matchings(n)) {
                const auto q = matching_lift(p);
                t.expect(matching_sign(q) == matching_sign(p), "lift sign n=" + std::to_string(n));
                lifted.insert(q);
            }
            t.expect(lifted.size() == maximal_matching_count(n + 1), "lift onto n=" + std::to_string(n));
        }
    }
    return t.outcome("decomposition (n<=7), purity (n<=7), lower ideal (n<=6), f/g signs (n<=7), S** and lift (n<=9)");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"reference complex (5,1,-2,-3)", reference_complex},
        {"main theorem, exhaustive grid", exhaustive_main_theorem},
        {"main theorem, randomized, all routes", randomized_routes},
        {"Euler closed form", euler_corollary},
        {"base-case closed forms", base_cases},
        {"two-term recursions", recursion},
        {"shelling and EL-labeling", shelling},
        {"topology cross-check", topology},
        {"decreasing-weight identities", decreasing_suite},
        {"structural invariants", structural},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %2zu %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
