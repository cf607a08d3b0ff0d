#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fourierve/types.hpp"

namespace fve {

/// Value-domain factor: an ordered scope and 2^|scope| values.
///
/// Assignment index m encodes scope[j] as bit j of m (bit 0 least
/// significant); a clear bit means -1 and a set bit means +1.
class DenseTable {
public:
    DenseTable() : values_{1.0} {}

    /// Throws InvalidParams on duplicate ids, a length that is not
    /// 2^|scope|, or non-finite values.
    DenseTable(std::vector<VarId> scope, std::vector<double> values);

    static DenseTable constant(double value) { return DenseTable({}, {value}); }

    const std::vector<VarId>& scope() const { return scope_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::size_t arity() const { return scope_.size(); }

    double operator[](std::size_t index) const { return values_[index]; }

    /// Value at an assignment covering the scope; throws MissingAssignment.
    double at(const Assignment& a) const;

    /// Position of `v` in the scope, or -1.
    int position_of(VarId v) const;

private:
    std::vector<VarId> scope_;
    std::vector<double> values_;
};

}  // namespace fve
