#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxid/caps.hpp"
#include "coxid/complex.hpp"
#include "coxid/weights.hpp"

namespace coxid {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum class OutputFormat { Json, Text };

struct RunConfig {
    std::uint64_t seed = 42;
    Caps caps;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Json;
};

/// Exit codes: 0 every check passed, 1 a check failed, 2 usage/parse/cap error.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Report skeleton shared by every command. Numbers are exact: integers stay
/// JSON integers and non-integral rationals become "p/q" strings.
class JsonReport {
public:
    explicit JsonReport(std::string command);

    Json& inputs() { return doc_["inputs"]; }
    Json& results() { return doc_["results"]; }

    void add_check(const std::string& name, const Json& expected, const Json& actual);
    void add_check(const std::string& name, const Json& expected, const Json& actual, bool pass);

    bool all_pass() const { return all_pass_; }
    int exit_code() const { return all_pass_ ? kExitPass : kExitCheckFailed; }
    const Json& json() const { return doc_; }

private:
    Json doc_;
    bool all_pass_ = true;
};

Json error_report(const std::string& command, const std::string& kind, const std::string& message);

Json rational_json(const Rational& r);
Json weights_json(const WeightVector& lambda);
Json permutation_json(const Permutation& tau);
Json blocks_json(const OrderedPartition& sigma);

/// Complex with its weights and every face as block lists plus display label.
Json complex_to_json(const WeightedComplex& c);
/// Inverse of complex_to_json; validates faces and facets against the weights.
WeightedComplex complex_from_json(const Json& j);

/// Weights from a JSON array of integers and "p/q" strings.
WeightVector weights_from_json(const Json& j);

/// Deterministic serialization: two-space indent, trailing newline.
std::string render(const Json& report, OutputFormat format);

}  // namespace coxid
