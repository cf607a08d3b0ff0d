#pragma once

#include <cstddef>

#include "fourierve/model.hpp"

namespace fve {

/// Enumeration cap for the brute-force routines.
inline constexpr std::size_t kMaxBruteForceVars = 24;

/// Exact log10 Z by enumerating every assignment of the free variables,
/// including log10_scale; -infinity when Z = 0. Sums are compensated per
/// fixed-size chunk and reduced in chunk order, so the result does not
/// depend on how the chunks are scheduled. Throws TooManyVariables.
double brute_force_log10Z(const GraphicalModel& m);

/// Exact Pr(v = +1). Throws TooManyVariables, UnknownVariable,
/// InvalidParams (v fixed) or DegenerateMarginal.
double brute_force_marginal(const GraphicalModel& m, VarId v);

}  // namespace fve
