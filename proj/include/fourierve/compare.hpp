#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fourierve/generators.hpp"
#include "fourierve/ordering.hpp"

namespace fve {

enum class Suite { Grid, Backdoor };

struct CompareParams {
    Suite suite = Suite::Grid;
    std::size_t instances = 20;
    std::uint64_t seed = 0;

    std::size_t side = 10;
    double coupling = 1.0;
    double field = 0.1;
    bool mixed = true;

    BackdoorParams backdoor{16, 16, 3, 0.1, false};

    std::size_t store_cap = 1024;
    std::size_t multiply_cap = 1024;
    std::size_t i_bound = 10;
    OrderingSpec ordering;
    unsigned workers = 1;
};

struct CompareRecord {
    std::size_t instance = 0;
    std::string method;
    /// |log10 Z_method - log10 Z_true|; +infinity when the method failed.
    double abs_log10_err = 0.0;
    double seconds = 0.0;
};

struct CompareReport {
    std::vector<CompareRecord> records;  ///< sorted by instance, then method
    std::vector<double> truth;           ///< log10 Z per instance
    std::vector<std::string> truth_source;
    std::map<std::string, double> median_error;
};

/// Methods run on every instance, in output order.
const std::vector<std::string>& compare_methods();

/// Generates the seeded suite (instance i uses derive_seed(seed, i)),
/// computes ground truth by brute force when at most 20 free variables
/// remain and by exact-mode Fourier VE otherwise, then runs capped Fourier
/// VE under both truncation policies and the mini-bucket baseline.
CompareReport run_compare(const CompareParams& params);

/// `instance,method,abs_log10_err,seconds`, LF line endings.
std::string to_csv(const std::vector<CompareRecord>& records);

}  // namespace fve
