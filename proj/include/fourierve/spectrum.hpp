#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fourierve/algebra.hpp"
#include "fourierve/model.hpp"

namespace fve {

inline constexpr std::size_t kMaxSpectrumVars = 22;

struct FullSpectrum {
    SpectrumProfile profile;
    /// 2^-n sum_x f(x)^2 of the rescaled product, for Parseval checks.
    double mean_square = 0.0;
};

/// Multiplies all factors (after contractive rescaling) into one table over
/// the free variables, transforms it, and returns W_0..W_n. Throws
/// TooManyVariables above kMaxSpectrumVars.
FullSpectrum full_spectrum(const GraphicalModel& m);

/// Smallest k with sum_{j > k} W_j < epsilon. With `relative`, the tail is
/// divided by sum_j W_j first.
std::size_t concentration_degree(const SpectrumProfile& p, double epsilon, bool relative = false);

struct SpectrumRow {
    double eta;
    std::size_t nc;
    std::size_t degree;
    double median_wk;
};

struct SpectrumCellSummary {
    double eta;
    std::size_t nc;
    /// Median over instances of the relative-epsilon concentration degree.
    double median_concentration_degree;
};

struct SpectrumExperiment {
    std::vector<SpectrumRow> rows;  ///< sorted by eta, nc, degree
    std::vector<SpectrumCellSummary> cells;
    /// max over instances of |sum_k W_k - mean f^2| / mean f^2
    double max_parseval_rel_error = 0.0;
};

struct SpectrumExperimentParams {
    std::size_t n = 20;
    std::size_t k = 3;
    std::vector<std::size_t> nc_list;
    std::vector<double> eta_list;
    std::size_t instances_per_cell = 100;
    std::uint64_t seed = 0;
    /// Relative epsilon for the per-cell concentration degree.
    double epsilon = 1e-3;
};

/// Weighted k-SAT sweep: per (eta, nc) cell, the median of W_k across
/// seeded instances. Instance i of a cell uses
/// derive_seed(seed, (cell << 32) | i) with cells numbered eta-major in
/// the given list order.
SpectrumExperiment spectrum_experiment(const SpectrumExperimentParams& params);

/// CSV with header `eta,nc,degree,median_wk`, 12 significant digits, LF.
std::string to_csv(const std::vector<SpectrumRow>& rows);

double median(std::vector<double> values);

}  // namespace fve
