#include "coxid/report.hpp"

#include <sstream>

#include "coxid/error.hpp"

namespace coxid {

JsonReport::JsonReport(std::string command) {
    doc_["schema_version"] = kSchemaVersion;
    doc_["command"] = std::move(command);
    doc_["inputs"] = Json::object();
    doc_["results"] = Json::object();
    doc_["checks"] = Json::array();
}

void JsonReport::add_check(const std::string& name, const Json& expected, const Json& actual) {
    add_check(name, expected, actual, expected == actual);
}

void JsonReport::add_check(const std::string& name, const Json& expected, const Json& actual, bool pass) {
    doc_["checks"].push_back(Json{{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
    all_pass_ = all_pass_ && pass;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["error"] = Json{{"kind", kind}, {"message", message}};
    return j;
}

Json rational_json(const Rational& r) {
    namespace mp = boost::multiprecision;
    if (mp::denominator(r) == 1 && mp::abs(mp::numerator(r)) < mp::cpp_int(1LL << 62)) {
        return mp::numerator(r).convert_to<long long>();
    }
    return to_string(r);
}

Json weights_json(const WeightVector& lambda) {
    Json arr = Json::array();
    for (const auto& v : lambda.values()) arr.push_back(rational_json(v));
    return arr;
}

Json permutation_json(const Permutation& tau) { return tau.one_line(); }

Json blocks_json(const OrderedPartition& sigma) { return sigma.block_lists(); }

Json complex_to_json(const WeightedComplex& c) {
    Json j;
    j["lambda"] = weights_json(c.lambda);
    Json faces = Json::array();
    for (const auto& s : c.faces) {
        faces.push_back(Json{{"blocks", blocks_json(s)}, {"label", s.label()}, {"dimension", s.size() - 2}});
    }
    j["faces"] = std::move(faces);
    Json facets = Json::array();
    for (const auto& f : c.facets) facets.push_back(permutation_json(f));
    j["facets"] = std::move(facets);
    return j;
}

WeightVector weights_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("weights must be a JSON array");
    std::vector<Rational> values;
    for (const auto& v : j) {
        if (v.is_number_integer()) {
            values.emplace_back(v.get<long long>());
        } else if (v.is_string()) {
            values.push_back(parse_rational(v.get<std::string>()));
        } else {
            throw ParseError("weights must be integers or \"p/q\" strings");
        }
    }
    return WeightVector(values);
}

WeightedComplex complex_from_json(const Json& j) {
    try {
        WeightedComplex c{weights_from_json(j.at("lambda")), {}, {}};
        const int n = c.lambda.size();
        for (const auto& face : j.at("faces")) {
            std::vector<Mask> blocks;
            for (const auto& block : face.at("blocks")) {
                Mask m = 0;
                for (const auto& e : block) {
                    const int v = e.get<int>();
                    if (v < 1 || v > n) throw ParseError("face element outside [n]");
                    m |= element_bit(v);
                }
                blocks.push_back(m);
            }
            OrderedPartition sigma(n, blocks);
            if (!in_P(c.lambda, sigma)) throw ParseError("listed face " + sigma.label() + " is not in P(lambda)");
            c.faces.push_back(sigma);
        }
        for (const auto& facet : j.at("facets")) c.facets.emplace_back(facet.get<std::vector<int>>());
        return c;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed complex JSON: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("malformed complex JSON: ") + e.what());
    }
}

namespace {

void render_text(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

}  // namespace

std::string render(const Json& report, OutputFormat format) {
    if (format == OutputFormat::Json) return report.dump(2) + "\n";
    std::ostringstream out;
    if (report.contains("checks")) {
        for (const auto& check : report["checks"]) {
            out << (check["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << check["name"].get<std::string>()
                << ": expected " << check["expected"].dump() << ", actual " << check["actual"].dump() << '\n';
        }
    }
    Json rest = report;
    rest.erase("checks");
    render_text(rest, "", out);
    return out.str();
}

}  // namespace coxid
