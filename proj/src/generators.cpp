#include "fourierve/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourierve/error.hpp"
#include "fourierve/rng.hpp"

namespace fve {

GraphicalModel gen_weighted_ksat(std::size_t n, std::size_t nc, std::size_t k, double eta,
                                 std::uint64_t seed) {
    if (k < 1 || k > n || k > 20) throw InvalidParams("weighted k-SAT needs 1 <= k <= n, k <= 20");
    if (!(eta >= 0.0 && eta < 1.0)) throw InvalidParams("weighted k-SAT needs 0 <= eta < 1");
    Rng rng(seed);
    std::vector<DenseTable> factors;
    factors.reserve(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        const auto picked = rng.sample_distinct(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
        std::vector<int> literal(k);
        for (auto& s : literal) s = rng.spin();
        std::vector<VarId> scope(picked.begin(), picked.end());
        std::vector<double> values(std::size_t{1} << k);
        for (std::size_t m = 0; m < values.size(); ++m) {
            bool satisfied = false;
            for (std::size_t j = 0; j < k && !satisfied; ++j) {
                const int x = ((m >> j) & 1U) ? 1 : -1;
                satisfied = x == literal[j];
            }
            values[m] = satisfied ? 1.0 : eta;
        }
        factors.emplace_back(std::move(scope), std::move(values));
    }
    return GraphicalModel(n, std::move(factors));
}

GraphicalModel gen_ising_grid(std::size_t side, double coupling_strength, double field_strength,
                              bool mixed, std::uint64_t seed) {
    if (side < 2) throw InvalidParams("Ising grid side must be at least 2");
    if (coupling_strength < 0.0 || field_strength < 0.0)
        throw InvalidParams("Ising strengths must be nonnegative");
    Rng rng(seed);
    const std::size_t n = side * side;
    std::vector<DenseTable> factors;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = rng.uniform(-field_strength, field_strength);
        factors.emplace_back(std::vector<VarId>{static_cast<VarId>(i)},
                             std::vector<double>{std::exp(-a), std::exp(a)});
    }
    auto edge = [&](std::size_t i, std::size_t j) {
        const double b = mixed ? rng.uniform(-coupling_strength, coupling_strength)
                               : rng.uniform(0.0, coupling_strength);
        const double same = std::exp(b), diff = std::exp(-b);
        factors.emplace_back(std::vector<VarId>{static_cast<VarId>(i), static_cast<VarId>(j)},
                             std::vector<double>{same, diff, diff, same});
    };
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const std::size_t i = r * side + c;
            if (c + 1 < side) edge(i, i + 1);
            if (r + 1 < side) edge(i, i + side);
        }
    }
    return GraphicalModel(n, std::move(factors));
}

GraphicalModel gen_backdoor(const BackdoorParams& p, std::uint64_t seed) {
    if (p.num_vars < 3) throw InvalidParams("backdoor instances need at least 3 variables");
    if (p.base_coupling < 0.0) throw InvalidParams("base coupling must be nonnegative");
    const std::size_t needed = p.num_triples == 0 ? 0 : (p.linked ? 2 * p.num_triples + 1 : 3 * p.num_triples);
    if (needed > p.num_vars)
        throw InvalidParams("backdoor triples need " + std::to_string(needed) + " variables, model has " +
                            std::to_string(p.num_vars));
    Rng rng(seed);
    const auto n = static_cast<std::uint32_t>(p.num_vars);
    std::vector<DenseTable> factors;
    for (std::size_t f = 0; f < p.num_random_factors; ++f) {
        const auto picked = rng.sample_distinct(n, 3);
        std::vector<double> values(8);
        for (double& v : values) v = std::exp(rng.uniform(-p.base_coupling, p.base_coupling));
        factors.emplace_back(std::vector<VarId>(picked.begin(), picked.end()), std::move(values));
    }
    const auto perm = rng.permutation(n);
    const std::size_t stride = p.linked ? 2 : 3;
    for (std::size_t t = 0; t < p.num_triples; ++t) {
        const std::size_t base = t * stride;
        std::vector<double> equal(8, 0.0);
        equal[0] = equal[7] = 1.0;
        factors.emplace_back(std::vector<VarId>{perm[base], perm[base + 1], perm[base + 2]}, std::move(equal));
    }
    return GraphicalModel(p.num_vars, std::move(factors));
}

namespace {

struct TreeBuilder {
    Rng& rng;
    std::size_t n;
    std::vector<double>& values;

    // Fills every assignment consistent with `fixed_mask`/`fixed_bits`.
    void build(std::size_t depth, std::uint64_t fixed_mask, std::uint64_t fixed_bits) {
        if (depth == 0) {
            const double leaf = rng.uniform01();
            const std::uint64_t free_mask = ((std::uint64_t{1} << n) - 1) & ~fixed_mask;
            // Enumerate the subsets of the free positions.
            std::uint64_t sub = 0;
            do {
                values[fixed_bits | sub] = leaf;
                sub = (sub - free_mask) & free_mask;
            } while (sub != 0);
            return;
        }
        std::vector<std::uint32_t> unused;
        for (std::uint32_t v = 0; v < n; ++v)
            if (!((fixed_mask >> v) & 1U)) unused.push_back(v);
        const std::uint32_t var = unused[rng.below(unused.size())];
        const std::uint64_t bit = std::uint64_t{1} << var;
        build(depth - 1, fixed_mask | bit, fixed_bits);
        build(depth - 1, fixed_mask | bit, fixed_bits | bit);
    }
};

}  // namespace

DenseTable gen_decision_tree_fn(std::size_t n, std::size_t depth, std::uint64_t seed) {
    if (depth > n || n > 20) throw InvalidParams("decision tree needs depth <= n <= 20");
    Rng rng(seed);
    std::vector<double> values(std::size_t{1} << n, 0.0);
    TreeBuilder{rng, n, values}.build(depth, 0, 0);
    std::vector<VarId> scope(n);
    for (std::size_t i = 0; i < n; ++i) scope[i] = static_cast<VarId>(i);
    return DenseTable(std::move(scope), std::move(values));
}

}  // namespace fve
