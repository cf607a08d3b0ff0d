#include "fourierve/dense_table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourierve/error.hpp"

namespace fve {

void Assignment::set(VarId var, int spin) {
    if (!is_spin(spin)) throw InvalidParams("spin values must be -1 or +1");
    values_[var] = spin;
}

std::optional<int> Assignment::get(VarId var) const {
    auto it = values_.find(var);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

DenseTable::DenseTable(std::vector<VarId> scope, std::vector<double> values)
    : scope_(std::move(scope)), values_(std::move(values)) {
    auto sorted = scope_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidParams("DenseTable: duplicate variable in scope");
    if (scope_.size() >= 63 || values_.size() != (std::size_t{1} << scope_.size()))
        throw InvalidParams("DenseTable: expected 2^" + std::to_string(scope_.size()) +
                            " values, got " + std::to_string(values_.size()));
    for (double v : values_)
        if (!std::isfinite(v)) throw InvalidParams("DenseTable: non-finite value");
}

int DenseTable::position_of(VarId v) const {
    auto it = std::find(scope_.begin(), scope_.end(), v);
    return it == scope_.end() ? -1 : static_cast<int>(it - scope_.begin());
}

double DenseTable::at(const Assignment& a) const {
    std::size_t index = 0;
    for (std::size_t j = 0; j < scope_.size(); ++j) {
        auto spin = a.get(scope_[j]);
        if (!spin) throw MissingAssignment("no value for variable " + std::to_string(scope_[j]));
        if (*spin == 1) index |= std::size_t{1} << j;
    }
    return values_[index];
}

}  // namespace fve
