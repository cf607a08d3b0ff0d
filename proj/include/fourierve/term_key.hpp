#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fourierve/types.hpp"

namespace fve {

/// A subset S of variables, identifying the parity basis function
/// chi_S(x) = prod_{i in S} x_i. Stored as strictly increasing global ids;
/// the empty key is the constant term.
class TermKey {
public:
    TermKey() = default;

    /// Sorts the ids; throws InvalidParams on duplicates.
    explicit TermKey(std::vector<VarId> vars);
    TermKey(std::initializer_list<VarId> vars) : TermKey(std::vector<VarId>(vars)) {}

    /// Caller guarantees `vars` is strictly increasing.
    static TermKey from_sorted(std::vector<VarId> vars) {
        TermKey key;
        key.vars_ = std::move(vars);
        return key;
    }

    std::span<const VarId> vars() const { return vars_; }
    std::size_t degree() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    bool contains(VarId v) const;

    /// Key of chi_S * chi_T, i.e. the symmetric difference.
    TermKey symmetric_difference(const TermKey& other) const;
    /// Copy with `v` removed (no-op if absent).
    TermKey without(VarId v) const;

    friend bool operator==(const TermKey&, const TermKey&) = default;
    /// Lexicographic on the id sequence.
    friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
        return a.vars_ <=> b.vars_;
    }

private:
    std::vector<VarId> vars_;
};

struct TermKeyHash {
    std::size_t operator()(const TermKey& key) const noexcept;
};

}  // namespace fve
