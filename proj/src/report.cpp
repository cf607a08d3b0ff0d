#include "fourierve/report.hpp"

#include <cmath>
#include <cstdio>

namespace fve {

nlohmann::json to_json(const InferReport& r) {
    nlohmann::json j;
    j["model"] = r.model_path;
    j["evidence"] = r.evidence_path.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.evidence_path);
    j["config"] = {
        {"method", r.method},     {"policy", r.policy},         {"order", r.order},
        {"store_cap", r.store_cap}, {"mul_cap", r.multiply_cap}, {"ibound", r.i_bound},
        {"seed", r.seed},
    };
    j["num_vars"] = r.num_vars;
    j["num_factors"] = r.num_factors;
    j["status"] = r.result.ok() ? "ok" : "failed";
    if (r.result.ok() && std::isfinite(r.result.log10_Z)) {
        j["log10_Z"] = r.result.log10_Z;
    } else {
        j["log10_Z"] = nullptr;
        if (r.result.ok()) j["log10_Z_text"] = "-inf";
    }
    if (!r.result.ok()) j["diagnostic"] = r.result.diagnostic;
    j["peak_terms"] = r.result.peak_terms;
    j["seconds"] = r.seconds;
    j["elimination_order"] = r.result.eliminated_order;
    return j;
}

std::vector<std::string> check_infer_schema(const nlohmann::json& j) {
    std::vector<std::string> problems;
    auto require = [&](const nlohmann::json& obj, const char* key, auto predicate, const char* type) {
        if (!obj.is_object() || !obj.contains(key))
            problems.push_back(std::string("missing key '") + key + "'");
        else if (!predicate(obj.at(key)))
            problems.push_back(std::string("key '") + key + "' is not " + type);
    };
    auto is_string = [](const nlohmann::json& v) { return v.is_string(); };
    auto is_count = [](const nlohmann::json& v) { return v.is_number_unsigned(); };
    auto is_number = [](const nlohmann::json& v) { return v.is_number(); };

    require(j, "model", is_string, "a string");
    require(j, "evidence", [](const auto& v) { return v.is_null() || v.is_string(); }, "a string or null");
    require(j, "config", [](const auto& v) { return v.is_object(); }, "an object");
    if (j.contains("config") && j.at("config").is_object()) {
        const auto& c = j.at("config");
        require(c, "method", is_string, "a string");
        require(c, "policy", is_string, "a string");
        require(c, "order", is_string, "a string");
        require(c, "store_cap", is_count, "a count");
        require(c, "mul_cap", is_count, "a count");
        require(c, "ibound", is_count, "a count");
        require(c, "seed", is_count, "a count");
    }
    require(j, "num_vars", is_count, "a count");
    require(j, "num_factors", is_count, "a count");
    require(j, "status", [](const auto& v) { return v == "ok" || v == "failed"; }, "\"ok\" or \"failed\"");
    require(j, "log10_Z", [](const auto& v) { return v.is_null() || v.is_number(); }, "a number or null");
    require(j, "peak_terms", is_count, "a count");
    require(j, "seconds", is_number, "a number");
    require(j, "elimination_order", [](const auto& v) { return v.is_array(); }, "an array");

    if (j.value("status", "") == "failed" && !j.contains("diagnostic"))
        problems.push_back("failed record without 'diagnostic'");
    if (j.value("status", "") == "ok" && j.contains("log10_Z") && j.at("log10_Z").is_null() &&
        j.value("log10_Z_text", "") != "-inf")
        problems.push_back("null log10_Z without log10_Z_text = \"-inf\"");
    return problems;
}

std::string to_text(const InferReport& r) {
    char buf[96];
    std::string out;
    if (r.result.ok()) {
        if (std::isfinite(r.result.log10_Z))
            std::snprintf(buf, sizeof buf, "log10_Z = %.15g\n", r.result.log10_Z);
        else
            std::snprintf(buf, sizeof buf, "log10_Z = -inf\n");
        out += buf;
    } else {
        out += "FAILED " + r.result.diagnostic + "\n";
    }
    std::snprintf(buf, sizeof buf, "seconds = %.6f\n", r.seconds);
    out += buf;
    out += "peak_terms = " + std::to_string(r.result.peak_terms) + "\n";
    out += "method = " + r.method + "\n";
    return out;
}

}  // namespace fve
