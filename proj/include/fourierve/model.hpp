#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fourierve/dense_table.hpp"
#include "fourierve/types.hpp"

namespace fve {

/// Observed spins keyed by variable.
class Evidence {
public:
    Evidence() = default;

    /// Throws InvalidParams on a bad spin or a conflicting repeat.
    void set(VarId var, int spin);
    std::optional<int> get(VarId var) const;
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    const std::map<VarId, int>& values() const { return values_; }

    friend bool operator==(const Evidence&, const Evidence&) = default;

private:
    std::map<VarId, int> values_;
};

/// Product of nonnegative factors over `num_vars` binary variables, with
/// Z = 10^log10_scale * sum_x prod_i factor_i(x).
///
/// Variables fixed by evidence stay counted in num_vars but are excluded
/// from the sum: they contribute a single assignment.
class GraphicalModel {
public:
    /// Throws InvalidParams on out-of-range scope ids or negative values.
    GraphicalModel(std::size_t num_vars, std::vector<DenseTable> factors, double log10_scale = 0.0);

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<DenseTable>& factors() const { return factors_; }
    double log10_scale() const { return log10_scale_; }

    bool is_fixed(VarId v) const { return fixed_.count(v) != 0; }
    const std::map<VarId, int>& fixed() const { return fixed_; }
    /// Variables summed over, ascending.
    std::vector<VarId> free_vars() const;

    /// Largest factor arity.
    std::size_t width() const;

private:
    friend GraphicalModel normalize_contractive(const GraphicalModel&);
    friend GraphicalModel apply_evidence(const GraphicalModel&, const Evidence&);

    std::size_t num_vars_;
    std::vector<DenseTable> factors_;
    double log10_scale_;
    std::map<VarId, int> fixed_;
};

/// Divides every factor by its maximum and moves the log10 of the maxima
/// into log10_scale. Throws AllZeroFactor if some factor is identically 0.
GraphicalModel normalize_contractive(const GraphicalModel& m);

/// Slices each factor at the observed spins and marks the evidence
/// variables as fixed. Throws UnknownVariable for ids >= num_vars and
/// InvalidParams when re-fixing a variable to the other spin.
GraphicalModel apply_evidence(const GraphicalModel& m, const Evidence& e);

/// Smallest eta for which every factor is contractive (max exactly 1, all
/// other values <= eta); nullopt when some factor's max is not 1.
std::optional<double> contractive_eta(const GraphicalModel& m);

}  // namespace fve
