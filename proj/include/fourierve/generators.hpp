#pragma once

#include <cstddef>
#include <cstdint>

#include "fourierve/dense_table.hpp"
#include "fourierve/model.hpp"

// Seeded instance generators. All randomness comes from fve::Rng, so a seed
// yields the same instance on every platform.

namespace fve {

/// Weighted k-SAT: `nc` clauses over `n` variables, each on k distinct
/// variables with random literal signs. A clause factor is 1 when satisfied
/// and `eta` otherwise. Requires 1 <= k <= n and 0 <= eta < 1.
GraphicalModel gen_weighted_ksat(std::size_t n, std::size_t nc, std::size_t k, double eta,
                                 std::uint64_t seed);

/// L x L Ising grid, variable r * L + c. One unary factor exp(a_i x_i) per
/// node, a_i ~ U[-field, field], then one pairwise factor exp(b x_i x_j)
/// per edge (right neighbour, then down neighbour, in node order), b ~
/// U[-coupling, coupling] if `mixed`, else U[0, coupling]. Requires L >= 2.
GraphicalModel gen_ising_grid(std::size_t side, double coupling_strength, double field_strength,
                              bool mixed, std::uint64_t seed);

struct BackdoorParams {
    std::size_t num_vars = 0;
    /// Random size-3 factors with entries exp(u), u ~ U[-base_coupling, base_coupling].
    std::size_t num_random_factors = 0;
    /// Equality triples: value 1 if all three spins agree, else 0.
    std::size_t num_triples = 0;
    double base_coupling = 0.1;
    /// false: disjoint triples; true: consecutive triples share one variable.
    bool linked = false;
};

/// Backdoor-structured model. Triple variables come from a random
/// permutation of the variables. Throws InvalidParams if they do not fit.
GraphicalModel gen_backdoor(const BackdoorParams& params, std::uint64_t seed);

/// Value table over variables 0..n-1 of a random complete decision tree of
/// the given depth. Paths test distinct variables; leaves are U[0, 1].
/// Requires depth <= n <= 20.
DenseTable gen_decision_tree_fn(std::size_t n, std::size_t depth, std::uint64_t seed);

}  // namespace fve
