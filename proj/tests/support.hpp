#pragma once

// Test-only generators and oracles. Nothing here goes through the
// butterfly transforms or the elimination engine.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fourierve/dense_table.hpp"
#include "fourierve/fourier_factor.hpp"
#include "fourierve/model.hpp"
#include "fourierve/rng.hpp"

namespace fve::test {

/// k distinct ids drawn from [0, universe), in random order.
inline std::vector<VarId> random_scope(Rng& rng, std::size_t universe, std::size_t k) {
    auto picked = rng.sample_distinct(static_cast<std::uint32_t>(universe), static_cast<std::uint32_t>(k));
    return {picked.begin(), picked.end()};
}

inline DenseTable random_table(Rng& rng, std::vector<VarId> scope, double lo = -1.0, double hi = 1.0) {
    std::vector<double> values(std::size_t{1} << scope.size());
    for (double& v : values) v = rng.uniform(lo, hi);
    return DenseTable(std::move(scope), std::move(values));
}

/// Random polynomial over `scope` keeping each monomial with probability
/// `density` (the constant term always).
inline FourierFactor random_factor(Rng& rng, std::vector<VarId> scope, double density = 1.0) {
    std::sort(scope.begin(), scope.end());
    FourierFactor::TermMap terms;
    const std::size_t k = scope.size();
    for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
        if (m != 0 && !rng.bernoulli(density)) continue;
        std::vector<VarId> vars;
        for (std::size_t j = 0; j < k; ++j)
            if ((m >> j) & 1U) vars.push_back(scope[j]);
        terms.emplace(TermKey::from_sorted(vars), rng.uniform(-1.0, 1.0));
    }
    return FourierFactor(scope, std::move(terms));
}

/// Calls fn(assignment, index) for all 2^|scope| assignments; bit j of the
/// index is scope[j] set to +1.
inline void for_each_assignment(const std::vector<VarId>& scope,
                                const std::function<void(const Assignment&, std::size_t)>& fn) {
    for (std::size_t m = 0; m < (std::size_t{1} << scope.size()); ++m) {
        Assignment a;
        for (std::size_t j = 0; j < scope.size(); ++j) a.set(scope[j], ((m >> j) & 1U) ? 1 : -1);
        fn(a, m);
    }
}

/// fhat(S) by the defining inner product 2^-k sum_x f(x) chi_S(x), O(4^k).
/// Keys are subsets of the table scope; includes exact zeros.
inline std::map<TermKey, double> naive_coefficients(const DenseTable& t) {
    const std::size_t k = t.arity();
    std::map<TermKey, double> out;
    for (std::size_t s = 0; s < t.size(); ++s) {
        double sum = 0.0;
        for (std::size_t x = 0; x < t.size(); ++x) {
            int chi = 1;
            for (std::size_t j = 0; j < k; ++j)
                if (((s >> j) & 1U) && !((x >> j) & 1U)) chi = -chi;
            sum += chi * t[x];
        }
        std::vector<VarId> vars;
        for (std::size_t j = 0; j < k; ++j)
            if ((s >> j) & 1U) vars.push_back(t.scope()[j]);
        out[TermKey(vars)] = std::ldexp(sum, -static_cast<int>(k));
    }
    return out;
}

/// Direct sum of prod_i factor_i(x) over the free variables, by recursion
/// over Assignment objects; slow but shares no code with the oracle module.
inline double naive_partition_function(const GraphicalModel& m) {
    const auto vars = m.free_vars();
    double z = 0.0;
    for_each_assignment(vars, [&](const Assignment& a, std::size_t) {
        double w = 1.0;
        for (const auto& f : m.factors()) w *= f.at(a);
        z += w;
    });
    return z * std::pow(10.0, m.log10_scale());
}

/// Random nonnegative model: `num_factors` factors of arity 1..max_arity.
inline GraphicalModel random_model(Rng& rng, std::size_t n, std::size_t num_factors, std::size_t max_arity,
                                   double lo = 0.05, double hi = 2.0) {
    std::vector<DenseTable> factors;
    for (std::size_t i = 0; i < num_factors; ++i) {
        const std::size_t k = 1 + rng.below(std::min(max_arity, n));
        factors.push_back(random_table(rng, random_scope(rng, n, k), lo, hi));
    }
    return GraphicalModel(n, std::move(factors));
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace fve::test
