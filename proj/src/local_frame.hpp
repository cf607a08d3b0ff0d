#pragma once

// Maps TermKeys over a sorted variable list to bit masks and back. Used by
// the dense and mask-based sparse paths; at most 64 variables.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fourierve/term_key.hpp"

namespace fve::detail {

class LocalFrame {
public:
    explicit LocalFrame(std::vector<VarId> sorted_vars) : vars_(std::move(sorted_vars)) {}

    std::size_t size() const { return vars_.size(); }
    const std::vector<VarId>& vars() const { return vars_; }

    /// Caller guarantees every key variable is in the frame.
    std::uint64_t mask_of(const TermKey& key) const {
        std::uint64_t mask = 0;
        auto lo = vars_.begin();
        for (VarId v : key.vars()) {
            lo = std::lower_bound(lo, vars_.end(), v);
            mask |= std::uint64_t{1} << (lo - vars_.begin());
        }
        return mask;
    }

    TermKey key_of(std::uint64_t mask) const {
        std::vector<VarId> out;
        out.reserve(static_cast<std::size_t>(std::popcount(mask)));
        while (mask != 0) {
            out.push_back(vars_[static_cast<std::size_t>(std::countr_zero(mask))]);
            mask &= mask - 1;
        }
        return TermKey::from_sorted(std::move(out));
    }

private:
    std::vector<VarId> vars_;
};

inline std::vector<VarId> union_scope(std::span<const VarId> a, std::span<const VarId> b) {
    std::vector<VarId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace fve::detail
