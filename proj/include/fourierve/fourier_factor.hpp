#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "fourierve/term_key.hpp"
#include "fourierve/types.hpp"

namespace fve {

/// Sparse multilinear polynomial f(x) = sum_S fhat(S) chi_S(x) over a
/// declared scope of global variable ids.
///
/// Invariants: every key is a subset of the scope, every coefficient is
/// finite and none is exactly zero. Values are immutable once built.
class FourierFactor {
public:
    using TermMap = std::unordered_map<TermKey, double, TermKeyHash>;

    FourierFactor() = default;

    /// Validating constructor. Sorts and dedups the scope, drops exact zeros,
    /// and throws ScopeMismatch / InvalidParams on a violated invariant.
    FourierFactor(std::vector<VarId> scope, TermMap terms);

    static FourierFactor constant(double value);

    /// Skips validation. `scope` must be sorted and unique and `terms` must
    /// already satisfy the invariants.
    static FourierFactor from_trusted(std::vector<VarId> scope, TermMap terms);

    const std::vector<VarId>& scope() const { return scope_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool in_scope(VarId v) const;

    /// Coefficient of chi_S; 0 when absent.
    double coefficient(const TermKey& key) const;
    double constant_term() const { return coefficient(TermKey{}); }

    /// Largest term degree, 0 for an empty factor.
    std::size_t max_degree() const;

    /// Term-by-term comparison treating missing keys as zero.
    bool approx_equal(const FourierFactor& other, double tolerance) const;

    /// Debug text: one `S : coefficient` line per term, sorted by degree and
    /// then by key. Ids are space separated and the constant term is `-`.
    std::string to_text() const;

private:
    std::vector<VarId> scope_;
    TermMap terms_;
};

}  // namespace fve
