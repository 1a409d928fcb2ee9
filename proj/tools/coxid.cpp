#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coxid/commands.hpp"
#include "coxid/error.hpp"

namespace {

using namespace coxid;

// Values such as "-1,-2" would otherwise be read as option names.
std::vector<std::string> join_negative_values(int argc, char** argv) {
    static const std::set<std::string> value_flags = {"--lambda", "--grid"};
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (value_flags.count(a) && i + 1 < argc && argv[i + 1][0] == '-' && argv[i + 1][1] != '-') {
            args.push_back(a + "=" + argv[++i]);
        } else {
            args.push_back(std::move(a));
        }
    }
    std::reverse(args.begin(), args.end());
    return args;
}

std::vector<long long> parse_integer_list(const std::string& text) {
    std::vector<long long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("grid values must be comma-separated integers, got '" + token + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void emit(const std::string& text, const RunConfig& config) {
    if (config.output_path) {
        std::ofstream out(*config.output_path, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + *config.output_path + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted Coxeter complex verification engine"};
    app.require_subcommand(1);

    RunConfig config;
    std::string lambda_text;
    std::string format = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
        sub->add_option("--out", out_path, "Write the report to this file");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--cap-ordered-partitions", config.caps.ordered_partitions);
        sub->add_option("--cap-complex", config.caps.complex);
        sub->add_option("--cap-matchings", config.caps.matchings);
        sub->add_option("--cap-pfaffian", config.caps.pfaffian_order);
        sub->add_option("--cap-homology", config.caps.homology);
        sub->add_option("--cap-el", config.caps.el_labeling);
        sub->add_option("--cap-facets", config.caps.facets);
        sub->add_option("--cap-decomposition", config.caps.decomposition);
    };

    auto* compute = app.add_subcommand("compute", "Evaluate S and T by the requested routes");
    std::vector<std::string> quantities;
    bool all = false;
    compute->add_option("--lambda", lambda_text, "Weights, e.g. 5,1,-2,-3 or 1/2,-1")->required();
    compute->add_option("quantities", quantities, "Any of S, T, Tpf, Srec, Sdec");
    compute->add_flag("--all", all, "S, T, Tpf and Srec (plus Sdec for decreasing weights)");
    add_common(compute);

    auto* complex = app.add_subcommand("complex", "Build the weighted complex");
    bool export_faces = false;
    complex->add_option("--lambda", lambda_text, "Weights")->required();
    complex->add_flag("--export", export_faces, "Include every face");
    add_common(complex);

    auto* shell = app.add_subcommand("shell", "Check a shelling order");
    std::string order_kind = "bruhat";
    std::string order_file;
    int samples = 1;
    shell->add_option("--lambda", lambda_text, "Weights")->required();
    shell->add_option("--order", order_kind, "Order source")->check(CLI::IsMember({"bruhat", "lex", "file"}));
    shell->add_option("--order-file", order_file, "One permutation per line");
    shell->add_option("--samples", samples, "Linear extensions to sample")->check(CLI::Range(1, 100000));
    add_common(shell);

    auto* sweep = app.add_subcommand("sweep", "Run the invariant suites over many weight vectors");
    int n = 0;
    std::string grid_text;
    std::size_t random_count = 0;
    std::vector<std::string> suites;
    sweep->add_option("--n", n, "Ground set size")->required();
    auto* grid_opt = sweep->add_option("--grid", grid_text, "Integer values for every coordinate");
    auto* random_opt = sweep->add_option("--random", random_count, "Number of seeded random weight vectors");
    sweep->add_option("--suites", suites, "Subset of main_theorem, routes, recursion, euler, decomposition")
        ->delimiter(',');
    add_common(sweep);

    std::string command = "coxid";
    try {
        app.parse(join_negative_values(argc, argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << render(error_report(command, "usage", e.what()), OutputFormat::Json);
        return kExitUsage;
    }

    const auto* active = app.get_subcommands().front();
    command = active->get_name();
    config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
    if (!out_path.empty()) config.output_path = out_path;

    try {
        JsonReport report = [&] {
            if (command == "sweep") {
                SweepRequest req;
                req.n = n;
                if (*grid_opt) req.grid = parse_integer_list(grid_text);
                if (*random_opt) req.random_count = random_count;
                req.suites = suites;
                return cmd_sweep(req, config);
            }
            const auto lambda = WeightVector::parse(lambda_text);
            if (command == "compute") {
                std::set<Quantity> which;
                for (const auto& q : quantities) which.insert(parse_quantity(q));
                if (all) {
                    which.insert({Quantity::S, Quantity::T, Quantity::Tpf, Quantity::Srec});
                    if (lambda.weakly_decreasing()) which.insert(Quantity::Sdec);
                }
                if (which.empty()) which = {Quantity::S, Quantity::T};
                return cmd_compute(lambda, which, config);
            }
            if (command == "complex") return cmd_complex(lambda, export_faces, config);
            ShellRequest req;
            req.samples = samples;
            if (order_kind == "lex") req.source = OrderSource::LexEl;
            if (order_kind == "file") req.source = OrderSource::File;
            if (!order_file.empty()) req.order_file = order_file;
            return cmd_shell(lambda, req, config);
        }();
        emit(render(report.json(), config.format), config);
        return report.exit_code();
    } catch (const CapExceeded& e) {
        std::cout << render(error_report(command, "cap_exceeded", e.what()), OutputFormat::Json);
    } catch (const ParseError& e) {
        std::cout << render(error_report(command, "parse", e.what()), OutputFormat::Json);
    } catch (const InvalidArgument& e) {
        std::cout << render(error_report(command, "usage", e.what()), OutputFormat::Json);
    } catch (const VerificationFailure& e) {
        std::cout << render(error_report(command, "verification", e.what()), OutputFormat::Json);
        return kExitCheckFailed;
    }
    return kExitUsage;
}
