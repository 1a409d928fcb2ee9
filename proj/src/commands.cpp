#include "coxid/commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "coxid/cube_poset.hpp"
#include "coxid/error.hpp"
#include "coxid/homology.hpp"
#include "coxid/identity.hpp"
#include "coxid/random.hpp"
#include "coxid/shelling.hpp"

namespace coxid {

Quantity parse_quantity(const std::string& name) {
    if (name == "S") return Quantity::S;
    if (name == "T") return Quantity::T;
    if (name == "Tpf") return Quantity::Tpf;
    if (name == "Srec") return Quantity::Srec;
    if (name == "Sdec") return Quantity::Sdec;
    throw ParseError("unknown quantity '" + name + "' (expected S, T, Tpf, Srec or Sdec)");
}

// compute ------------------------------------------------------------------

JsonReport cmd_compute(const WeightVector& lambda, const std::set<Quantity>& which, const RunConfig& config) {
    if (lambda.empty()) throw InvalidArgument("compute: --lambda is required");
    if (which.count(Quantity::Sdec) && !lambda.weakly_decreasing()) {
        throw InvalidArgument("compute: Sdec needs weakly decreasing weights");
    }
    const int n = lambda.size();
    const long long sign_n = parity_sign(n);
    JsonReport report("compute");
    report.inputs()["lambda"] = weights_json(lambda);
    report.inputs()["n"] = n;
    Json requested = Json::array();
    for (auto q : which) {
        static const char* names[] = {"S", "T", "Tpf", "Srec", "Sdec"};
        requested.push_back(names[static_cast<int>(q)]);
    }
    report.inputs()["quantities"] = requested;

    std::optional<long long> s, t, tpf, srec, sdec;
    if (which.count(Quantity::S)) s = s_direct(lambda, config.caps);
    if (which.count(Quantity::T) || which.count(Quantity::S) || which.count(Quantity::Srec) ||
        which.count(Quantity::Sdec)) {
        t = t_direct(lambda, config.caps);
    }
    if (which.count(Quantity::Tpf)) tpf = t_via_pfaffian(lambda, config.caps);
    if (which.count(Quantity::Srec)) srec = s_recursive(lambda);
    if (which.count(Quantity::Sdec)) sdec = s_decreasing_formula(lambda, config.caps);

    auto& results = report.results();
    if (s) results["S"] = *s;
    if (t) results["T"] = *t;
    if (tpf) results["T_pfaffian"] = *tpf;
    if (srec) results["S_recursive"] = *srec;
    if (sdec) results["S_decreasing"] = *sdec;

    if (s) report.add_check("S = (-1)^n T", sign_n * *t, *s);
    if (tpf) report.add_check("T_pfaffian = T", t ? *t : t_direct(lambda, config.caps), *tpf);
    if (srec) report.add_check("S_recursive = (-1)^n T", sign_n * *t, *srec);
    if (sdec) report.add_check("S_decreasing = (-1)^n T", sign_n * *t, *sdec);
    return report;
}

// complex ------------------------------------------------------------------

JsonReport cmd_complex(const WeightVector& lambda, bool export_faces, const RunConfig& config) {
    if (lambda.empty()) throw InvalidArgument("complex: --lambda is required");
    const auto c = build_complex(lambda, config.caps);
    const int n = lambda.size();
    JsonReport report("complex");
    report.inputs()["lambda"] = weights_json(lambda);
    report.inputs()["n"] = n;
    report.inputs()["export"] = export_faces;

    auto& results = report.results();
    const auto cls = classify(c);
    results["f_vector"] = f_vector(c);
    results["classification"] = cls.to_string();
    results["euler_sum"] = euler_sum(c);
    Json facets = Json::array();
    for (const auto& f : c.facets) facets.push_back(permutation_json(f));
    results["facets"] = std::move(facets);

    report.add_check("euler_sum matches closed form", euler_closed_form(lambda), euler_sum(c));

    if (n <= config.caps.homology) {
        const auto betti = homology_gf2(c, config.caps);
        results["reduced_betti_gf2"] = betti;
        std::vector<long long> expected(static_cast<std::size_t>(n), 0);
        if (cls.topology == Topology::Sphere) expected.back() = 1;
        report.add_check("homology matches classification", expected, betti);
    }

    bool purity = true;
    for (const auto& s : c.faces) {
        const auto top = facet_below(s, lambda);
        purity = purity && std::binary_search(c.facets.begin(), c.facets.end(), top) && refines(OrderedPartition::singletons(top), s);
    }
    report.add_check("every face lies below a facet", true, purity);

    if (lambda.scaled_total() > 0 && lambda.distinct_entries() && n <= config.caps.el_labeling) {
        const auto el = el_labeling_verify(lambda, config.caps);
        results["el_labeling"] = el.ok ? "pass" : "fail";
        report.add_check("EL-labeling of B(lambda)", true, el.ok);
    } else {
        results["el_labeling"] = "not applicable";
    }
    if (export_faces) results["complex"] = complex_to_json(c);
    return report;
}

// shell --------------------------------------------------------------------

namespace {

Json shelling_json(const std::vector<Permutation>& order, const ShellingCheck& check) {
    Json j;
    Json ord = Json::array();
    for (const auto& f : order) ord.push_back(permutation_json(f));
    j["order"] = std::move(ord);
    Json restrictions = Json::array();
    for (const auto& r : check.restrictions) restrictions.push_back(r.label());
    j["restrictions"] = std::move(restrictions);
    j["homology_facets"] = check.homology_facets;
    j["is_shelling"] = check.is_shelling;
    j["interval_condition"] = check.interval_condition;
    j["first_bad_index"] = check.first_bad_index ? Json(*check.first_bad_index) : Json(nullptr);
    return j;
}

}  // namespace

JsonReport cmd_shell(const WeightVector& lambda, const ShellRequest& request, const RunConfig& config) {
    if (lambda.empty()) throw InvalidArgument("shell: --lambda is required");
    if (lambda.scaled_total() <= 0) throw InvalidArgument("shell: the weights must have positive total");
    const auto c = build_complex(lambda, config.caps);
    const int n = lambda.size();

    JsonReport report("shell");
    report.inputs()["lambda"] = weights_json(lambda);
    report.inputs()["n"] = n;
    report.inputs()["seed"] = config.seed;

    auto run = [&](const std::string& tag, const std::vector<Permutation>& order) {
        const auto check = verify_shelling(c, order);
        report.add_check(tag + ": shelling", true, check.is_shelling);
        report.add_check(tag + ": interval criterion agrees", check.is_shelling, check.interval_condition);
        return shelling_json(order, check);
    };

    auto& results = report.results();
    switch (request.source) {
        case OrderSource::LinearExtensionSample: {
            report.inputs()["order"] = "linear-extension-sample";
            report.inputs()["samples"] = request.samples;
            // Linear extensions are taken in labels where lambda is weakly decreasing, then mapped back.
            const auto tau = decreasing_sort_permutation(lambda);
            const auto tau_inv = tau.inverse();
            std::vector<Permutation> sorted_facets;
            for (const auto& f : c.facets) sorted_facets.push_back(tau.compose(f));
            results["relabeling"] = permutation_json(tau);
            Rng rng(config.seed);
            Json samples = Json::array();
            for (int s = 0; s < request.samples; ++s) {
                const auto extension = random_weak_bruhat_linear_extension(n, rng);
                std::vector<Permutation> order;
                for (const auto& p : restrict_order(extension, sorted_facets)) order.push_back(tau_inv.compose(p));
                samples.push_back(run("sample " + std::to_string(s), order));
            }
            const auto cert = decomposition(c);
            Json restrictions = Json::array();
            for (const auto& r : cert.restrictions) restrictions.push_back(r.label());
            Json cert_order = Json::array();
            for (const auto& f : cert.facet_order) cert_order.push_back(permutation_json(f));
            results["decomposition"] = Json{{"order", cert_order},
                                            {"restrictions", restrictions},
                                            {"homology_facets", cert.homology_facets}};
            report.add_check("decomposition satisfies the interval criterion", true,
                             interval_condition_holds(c, cert.facet_order, cert.restrictions));
            results["samples"] = std::move(samples);
            break;
        }
        case OrderSource::LexEl: {
            report.inputs()["order"] = "lex-EL";
            if (!lambda.distinct_entries()) throw InvalidArgument("shell: lex-EL order needs distinct weights");
            const auto el = el_labeling_verify(lambda, config.caps);
            report.add_check("EL-labeling of B(lambda)", true, el.ok);
            results["lexicographic"] = run("lexicographic order", lexicographic_order(lambda, c.facets));
            break;
        }
        case OrderSource::File: {
            report.inputs()["order"] = "file";
            if (!request.order_file) throw InvalidArgument("shell: --order-file is required for order source 'file'");
            report.inputs()["order_file"] = *request.order_file;
            results["file"] = run("file order", read_order_file(*request.order_file));
            break;
        }
    }
    return report;
}

// sweep --------------------------------------------------------------------

namespace {

struct CaseOutcome {
    long long s = 0;
    std::vector<std::pair<std::string, std::string>> failures;
};

CaseOutcome run_case(const WeightVector& lambda, const std::set<std::string>& suites, const Caps& caps) {
    CaseOutcome out;
    const int n = lambda.size();
    const long long sign_n = parity_sign(n);
    auto fail = [&](const std::string& suite, const std::string& detail) { out.failures.emplace_back(suite, detail); };

    out.s = s_direct(lambda, caps);
    const long long t = t_direct(lambda, caps);
    if (suites.count("main_theorem") && out.s != sign_n * t) {
        fail("main_theorem", "S = " + std::to_string(out.s) + ", T = " + std::to_string(t));
    }
    if (suites.count("routes")) {
        const long long tpf = t_via_pfaffian(lambda, caps);
        const long long srec = s_recursive(lambda);
        if (tpf != t) fail("routes", "T_pfaffian = " + std::to_string(tpf) + ", T = " + std::to_string(t));
        if (srec != out.s) fail("routes", "S_recursive = " + std::to_string(srec) + ", S = " + std::to_string(out.s));
    }
    if (suites.count("recursion")) {
        for (int i = 1; i < n; ++i) {
            const auto r = verify_recursion(lambda, i, caps);
            if (!r.holds()) {
                fail("recursion", "i = " + std::to_string(i) + ": S " + std::to_string(r.s_lhs) + " vs " +
                                      std::to_string(r.s_rhs) + ", T " + std::to_string(r.t_lhs) + " vs " +
                                      std::to_string(r.t_rhs));
            }
        }
    }
    if (suites.count("euler")) {
        const long long e = euler_sum_streaming(lambda, caps);
        if (e != euler_closed_form(lambda)) fail("euler", "euler_sum = " + std::to_string(e));
    }
    if (suites.count("decomposition") && n <= caps.decomposition) {
        try {
            const auto c = build_complex(lambda, caps);
            const auto cert = decomposition(c);
            if (!c.empty() && !interval_condition_holds(c, cert.facet_order, cert.restrictions)) {
                fail("decomposition", "interval criterion fails for the decomposition order");
            }
        } catch (const VerificationFailure& e) {
            fail("decomposition", e.what());
        }
    }
    return out;
}

}  // namespace

JsonReport cmd_sweep(const SweepRequest& request, const RunConfig& config) {
    const int n = request.n;
    if (n < 1 || n > kMaxGroundSet) throw InvalidArgument("sweep: --n must be in [1, 16]");
    if (request.grid.has_value() == request.random_count.has_value()) {
        throw InvalidArgument("sweep: give exactly one of --grid or --random");
    }
    std::set<std::string> suites;
    for (const auto& s : request.suites.empty() ? kSweepSuites : request.suites) {
        if (std::find(kSweepSuites.begin(), kSweepSuites.end(), s) == kSweepSuites.end()) {
            throw InvalidArgument("sweep: unknown suite '" + s + "'");
        }
        suites.insert(s);
    }
    require_cap(n, config.caps.ordered_partitions, "sweep");
    require_cap(n, config.caps.matchings, "sweep");

    std::vector<WeightVector> population;
    JsonReport report("sweep");
    report.inputs()["n"] = n;
    if (request.grid) {
        if (request.grid->empty()) throw InvalidArgument("sweep: empty grid");
        report.inputs()["grid"] = *request.grid;
        for_each_grid_point(n, *request.grid, [&](const WeightVector& w) { population.push_back(w); });
    } else {
        report.inputs()["random"] = *request.random_count;
        report.inputs()["seed"] = config.seed;
        Rng rng(config.seed);
        for (std::size_t i = 0; i < *request.random_count; ++i) {
            population.push_back(random_weights(n, WeightFamily::Any, rng));
        }
    }
    report.inputs()["suites"] = std::vector<std::string>(suites.begin(), suites.end());

    std::vector<CaseOutcome> outcomes(population.size());
    const auto count = static_cast<long>(population.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
        outcomes[static_cast<std::size_t>(i)] = run_case(population[static_cast<std::size_t>(i)], suites, config.caps);
    }

    std::map<std::string, std::size_t> failures_by_suite;
    std::map<long long, std::size_t> s_histogram;
    Json failures = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        ++s_histogram[outcomes[i].s];
        for (const auto& [suite, detail] : outcomes[i].failures) {
            ++failures_by_suite[suite];
            failures.push_back(Json{{"lambda", weights_json(population[i])}, {"suite", suite}, {"detail", detail}});
        }
    }

    auto& results = report.results();
    results["cases"] = population.size();
    Json per_suite = Json::object();
    for (const auto& s : kSweepSuites) {
        if (!suites.count(s)) continue;
        const bool skipped = s == "decomposition" && n > config.caps.decomposition;
        per_suite[s] = Json{{"failures", failures_by_suite[s]}, {"skipped", skipped}};
        if (!skipped) report.add_check(s, 0, failures_by_suite[s]);
    }
    results["suites"] = std::move(per_suite);
    Json histogram = Json::array();
    for (const auto& [value, cnt] : s_histogram) histogram.push_back(Json{{"S", value}, {"count", cnt}});
    results["s_distribution"] = std::move(histogram);
    results["failures"] = std::move(failures);
    return report;
}

// order files --------------------------------------------------------------

std::vector<Permutation> parse_order(std::istream& in) {
    std::vector<Permutation> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::vector<int> values;
        std::string token;
        while (fields >> token) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                values.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("order file line " + std::to_string(line_no) + ": bad entry '" + token + "'");
            }
        }
        if (values.empty()) continue;
        try {
            out.emplace_back(values);
        } catch (const InvalidArgument& e) {
            throw ParseError("order file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Permutation> read_order_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open order file '" + path + "'");
    return parse_order(in);
}

}  // namespace coxid
