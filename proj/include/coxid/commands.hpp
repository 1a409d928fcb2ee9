#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxid/report.hpp"

namespace coxid {

enum class Quantity { S, T, Tpf, Srec, Sdec };

/// "S", "T", "Tpf", "Srec", "Sdec". Throws ParseError otherwise.
Quantity parse_quantity(const std::string& name);

/// Requested values of S and T plus every cross-route agreement check that the
/// requested values make possible. Sdec requires weakly decreasing weights.
JsonReport cmd_compute(const WeightVector& lambda, const std::set<Quantity>& which, const RunConfig& config);

/// f-vector, facets, classification, Euler sum, GF(2) homology and the EL
/// verdict where applicable; with `export_faces` the full face list as well.
JsonReport cmd_complex(const WeightVector& lambda, bool export_faces, const RunConfig& config);

enum class OrderSource { LinearExtensionSample, LexEl, File };

struct ShellRequest {
    OrderSource source = OrderSource::LinearExtensionSample;
    std::optional<std::string> order_file;
    int samples = 1;
};

/// Shelling certificates for sampled weak-Bruhat linear extensions, for the
/// lexicographic order of the EL-labeling, or for an order read from a file.
JsonReport cmd_shell(const WeightVector& lambda, const ShellRequest& request, const RunConfig& config);

struct SweepRequest {
    int n = 0;
    std::optional<std::vector<long long>> grid;  // every lambda in grid^n
    std::optional<std::size_t> random_count;     // seeded random rational lambda
    std::vector<std::string> suites;             // empty: all suites
};

inline const std::vector<std::string> kSweepSuites = {"main_theorem", "routes", "recursion", "euler",
                                                      "decomposition"};

/// Runs the invariant suites over the population; lists every failing lambda.
JsonReport cmd_sweep(const SweepRequest& request, const RunConfig& config);

/// One permutation per line, entries separated by spaces or commas; blank
/// lines and '#' comments are skipped. Throws ParseError on malformed lines.
std::vector<Permutation> parse_order(std::istream& in);
std::vector<Permutation> read_order_file(const std::string& path);

}  // namespace coxid
