#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fourierve/algebra.hpp"
#include "fourierve/model.hpp"
#include "fourierve/ordering.hpp"

namespace fve {

/// Configuration of Fourier-domain variable elimination.
struct VEConfig {
    OrderingSpec ordering;
    /// Max terms kept in a message after elimination.
    std::size_t store_cap = std::size_t{1} << 20;
    /// Max terms of each operand entering a multiplication.
    std::size_t multiply_cap = std::size_t{1} << 10;
    TruncationPolicy policy = TruncationPolicy::MaxCoefficient;
    /// Ignore both caps; the result is exact up to rounding.
    bool exact_mode = false;

    static VEConfig exact(OrderingSpec ordering = {}) {
        VEConfig cfg;
        cfg.ordering = std::move(ordering);
        cfg.exact_mode = true;
        return cfg;
    }
    static VEConfig capped(std::size_t store, std::size_t multiply, TruncationPolicy policy,
                           OrderingSpec ordering = {}) {
        VEConfig cfg;
        cfg.ordering = std::move(ordering);
        cfg.store_cap = store;
        cfg.multiply_cap = multiply;
        cfg.policy = policy;
        return cfg;
    }
};

struct VEResult {
    enum class Status { Ok, Failure };

    Status status = Status::Ok;
    /// log10 Z; -infinity when Z = 0. Meaningless on Failure.
    double log10_Z = 0.0;
    std::vector<VarId> eliminated_order;
    /// Largest term (or table entry) count of any message or product.
    std::size_t peak_terms = 0;
    /// Set on Failure.
    std::string diagnostic;
    /// On Failure, the offending final constant (in the scaled frame).
    double raw_constant = 0.0;

    bool ok() const { return status == Status::Ok; }
};

/// Variable elimination with Fourier-domain messages.
///
/// Each factor is transformed once and placed in the bucket of its earliest
/// eliminated variable. A bucket's messages are multiplied smallest first
/// (operands truncated to multiply_cap), the bucket variable is summed out
/// and the result is truncated to store_cap and forwarded. An empty bucket
/// doubles Z. A final constant <= 0, which truncation can produce, is
/// reported as Failure rather than clamped.
VEResult run_ve(const GraphicalModel& m, const VEConfig& cfg);

/// Pr(v = +1), computed from two runs with v fixed to +1 and -1.
/// Throws InferenceFailure if a run fails, DegenerateMarginal if both
/// restricted partition functions vanish, UnknownVariable / InvalidParams
/// for a bad or already fixed variable.
double marginal(const GraphicalModel& m, VarId v, const VEConfig& cfg);

/// Sum-product mini-bucket elimination on dense tables. Each bucket is split
/// first-fit (largest scope first) into pieces whose union scope has at most
/// `i_bound` variables; each piece is summed out on its own. For nonnegative
/// factors the result is an upper bound on Z, exact when no bucket splits.
VEResult run_minibucket(const GraphicalModel& m, std::size_t i_bound, const OrderingSpec& ordering = {});

}  // namespace fve
