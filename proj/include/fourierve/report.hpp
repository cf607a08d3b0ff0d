#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourierve/ve.hpp"

namespace fve {

/// Everything `fve infer` reports, with the configuration echoed.
struct InferReport {
    std::string model_path;
    std::string evidence_path;  ///< empty when no evidence was given
    std::string method;         ///< fourier | minibucket | exact | bruteforce
    std::string policy;         ///< maxcoef | mindeg
    std::string order;          ///< mindeg | minfill
    std::size_t store_cap = 0;
    std::size_t multiply_cap = 0;
    std::size_t i_bound = 0;
    std::uint64_t seed = 0;
    std::size_t num_vars = 0;
    std::size_t num_factors = 0;
    VEResult result;
    double seconds = 0.0;
};

/// JSON record. `log10_Z` is a number, or null together with
/// `log10_Z_text` = "-inf" when Z = 0; failed runs carry `diagnostic`.
nlohmann::json to_json(const InferReport& report);

/// Problems found when checking a record against the infer schema; empty
/// when the record conforms.
std::vector<std::string> check_infer_schema(const nlohmann::json& record);

/// Human-readable report: `log10_Z = <value>` or `FAILED <diagnostic>`,
/// followed by timing and peak message size.
std::string to_text(const InferReport& report);

}  // namespace fve
