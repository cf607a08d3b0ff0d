#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fourierve/fourier_factor.hpp"
#include "fourierve/types.hpp"

namespace fve {

/// f(a) = sum_S fhat(S) prod_{i in S} a(i). Throws MissingAssignment if a
/// scope variable has no value.
double evaluate(const FourierFactor& f, const Assignment& a);

/// Schoolbook product, O(m_f m_g). chi_S chi_T = chi_{S xor T}.
FourierFactor multiply_sparse(const FourierFactor& f, const FourierFactor& g);

/// Product through the value domain, O(n 2^n) with n the union scope size.
/// Throws ScopeTooLarge above kMaxDenseVars.
FourierFactor multiply_dense(const FourierFactor& f, const FourierFactor& g);

enum class MultiplyPath { Sparse, Dense };

enum class CostPolicy {
    Cheapest,     ///< sparse iff m_f * m_g < n 2^n
    ForceSparse,
    ForceDense,
};

/// Path `multiply` takes under CostPolicy::Cheapest.
MultiplyPath choose_multiply_path(const FourierFactor& f, const FourierFactor& g);

FourierFactor multiply(const FourierFactor& f, const FourierFactor& g,
                       CostPolicy policy = CostPolicy::Cheapest);

/// Sums `v` out: terms containing v vanish, the rest double. Summing out a
/// variable outside the scope doubles every coefficient.
FourierFactor eliminate_var(const FourierFactor& f, VarId v);

/// Fixes v to `value` (+1 or -1) and drops it from the scope.
FourierFactor restrict(const FourierFactor& f, VarId v, int value);

/// Fixes every variable of `fixed` that lies in the scope, in one pass.
FourierFactor restrict(const FourierFactor& f, const Assignment& fixed);

struct RandomRestriction {
    FourierFactor factor;
    std::vector<VarId> retained;
};

/// Keeps each scope variable with probability `delta`, in ascending id
/// order, and fixes the others to uniform random spins. Deterministic for a
/// given seed. Throws InvalidParams unless 0 < delta <= 1.
RandomRestriction random_restriction(const FourierFactor& f, double delta, std::uint64_t seed);

enum class TruncationPolicy {
    MaxCoefficient,  ///< |c| desc, degree asc, key asc
    MinDegree,       ///< degree asc, |c| desc, key asc
};

/// Keeps at most `budget` terms. The constant term, when present, is always
/// kept and counts toward the budget. Throws InvalidParams if budget < 1.
FourierFactor truncate(const FourierFactor& f, TruncationPolicy policy, std::size_t budget);

/// Per-degree squared coefficient mass W_0..W_n.
struct SpectrumProfile {
    std::vector<double> weights;

    double total() const;
    /// sum_{j > k} W_j
    double tail_above(std::size_t k) const;
};

/// W_k = sum_{|S| = k} fhat(S)^2, for k = 0..|scope|.
SpectrumProfile degree_weights(const FourierFactor& f);

}  // namespace fve
