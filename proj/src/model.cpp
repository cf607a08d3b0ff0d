#include "fourierve/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourierve/error.hpp"

namespace fve {

void Evidence::set(VarId var, int spin) {
    if (!is_spin(spin)) throw InvalidParams("evidence spins must be -1 or +1");
    auto [it, inserted] = values_.emplace(var, spin);
    if (!inserted && it->second != spin)
        throw InvalidParams("conflicting evidence for variable " + std::to_string(var));
}

std::optional<int> Evidence::get(VarId var) const {
    auto it = values_.find(var);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

GraphicalModel::GraphicalModel(std::size_t num_vars, std::vector<DenseTable> factors,
                               double log10_scale)
    : num_vars_(num_vars), factors_(std::move(factors)), log10_scale_(log10_scale) {
    for (const auto& f : factors_) {
        for (VarId v : f.scope())
            if (v >= num_vars_)
                throw InvalidParams("factor variable " + std::to_string(v) + " >= num_vars " +
                                    std::to_string(num_vars_));
        for (double x : f.values())
            if (x < 0.0) throw InvalidParams("factor values must be nonnegative");
    }
}

std::vector<VarId> GraphicalModel::free_vars() const {
    std::vector<VarId> out;
    out.reserve(num_vars_);
    for (VarId v = 0; v < num_vars_; ++v)
        if (!is_fixed(v)) out.push_back(v);
    return out;
}

std::size_t GraphicalModel::width() const {
    std::size_t w = 0;
    for (const auto& f : factors_) w = std::max(w, f.arity());
    return w;
}

GraphicalModel normalize_contractive(const GraphicalModel& m) {
    GraphicalModel out = m;
    for (std::size_t i = 0; i < out.factors_.size(); ++i) {
        const auto& f = out.factors_[i];
        const double top = *std::max_element(f.values().begin(), f.values().end());
        if (top <= 0.0)
            throw AllZeroFactor("factor " + std::to_string(i) + " is identically zero");
        if (top == 1.0) continue;
        std::vector<double> values(f.values().begin(), f.values().end());
        for (double& x : values) x /= top;
        out.factors_[i] = DenseTable(f.scope(), std::move(values));
        out.log10_scale_ += std::log10(top);
    }
    return out;
}

GraphicalModel apply_evidence(const GraphicalModel& m, const Evidence& e) {
    for (const auto& [v, spin] : e.values()) {
        if (v >= m.num_vars())
            throw UnknownVariable("evidence variable " + std::to_string(v) + " not in model");
        auto it = m.fixed_.find(v);
        if (it != m.fixed_.end() && it->second != spin)
            throw InvalidParams("evidence conflicts with fixed variable " + std::to_string(v));
    }
    if (e.empty()) return m;

    GraphicalModel out = m;
    for (auto& f : out.factors_) {
        std::vector<VarId> scope;
        std::size_t fixed_bits = 0;
        std::vector<std::size_t> free_pos;
        for (std::size_t j = 0; j < f.arity(); ++j) {
            if (auto spin = e.get(f.scope()[j])) {
                if (*spin == 1) fixed_bits |= std::size_t{1} << j;
            } else {
                scope.push_back(f.scope()[j]);
                free_pos.push_back(j);
            }
        }
        if (scope.size() == f.arity()) continue;
        std::vector<double> values(std::size_t{1} << scope.size());
        for (std::size_t m2 = 0; m2 < values.size(); ++m2) {
            std::size_t full = fixed_bits;
            for (std::size_t j = 0; j < free_pos.size(); ++j)
                if ((m2 >> j) & 1U) full |= std::size_t{1} << free_pos[j];
            values[m2] = f[full];
        }
        f = DenseTable(std::move(scope), std::move(values));
    }
    for (const auto& [v, spin] : e.values()) out.fixed_[v] = spin;
    return out;
}

std::optional<double> contractive_eta(const GraphicalModel& m) {
    double eta = 0.0;
    for (const auto& f : m.factors()) {
        const double top = *std::max_element(f.values().begin(), f.values().end());
        if (top != 1.0) return std::nullopt;
        for (double x : f.values())
            if (x < 1.0) eta = std::max(eta, x);
    }
    return eta;
}

}  // namespace fve
