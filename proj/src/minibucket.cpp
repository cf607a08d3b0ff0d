#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fourierve/error.hpp"
#include "fourierve/transform.hpp"
#include "fourierve/ve.hpp"

namespace fve {

namespace {

// Table over a sorted scope; bit j of the index is scope[j].
struct Table {
    std::vector<VarId> scope;
    std::vector<double> values;
};

Table from_dense(const DenseTable& t) {
    const std::size_t k = t.arity();
    std::vector<std::size_t> order(k);
    for (std::size_t j = 0; j < k; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return t.scope()[a] < t.scope()[b]; });
    Table out;
    for (std::size_t j : order) out.scope.push_back(t.scope()[j]);
    out.values.resize(t.size());
    for (std::size_t m = 0; m < t.size(); ++m) {
        std::size_t src = 0;
        for (std::size_t j = 0; j < k; ++j)
            if ((m >> j) & 1U) src |= std::size_t{1} << order[j];
        out.values[m] = t[src];
    }
    return out;
}

std::vector<VarId> merged_scope(const std::vector<VarId>& a, const std::vector<VarId>& b) {
    std::vector<VarId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Product of `tables` summed over `v`.
Table multiply_and_sum_out(const std::vector<const Table*>& tables, VarId v) {
    std::vector<VarId> scope;
    for (const Table* t : tables) scope = merged_scope(scope, t->scope);
    if (scope.size() > kMaxDenseVars)
        throw ScopeTooLarge("mini-bucket table over " + std::to_string(scope.size()) + " variables");

    // For each table, bit positions of its scope inside `scope`.
    std::vector<std::vector<std::size_t>> positions;
    for (const Table* t : tables) {
        std::vector<std::size_t> pos;
        for (VarId x : t->scope)
            pos.push_back(static_cast<std::size_t>(std::lower_bound(scope.begin(), scope.end(), x) - scope.begin()));
        positions.push_back(std::move(pos));
    }
    const auto vpos = static_cast<std::size_t>(std::lower_bound(scope.begin(), scope.end(), v) - scope.begin());

    Table out;
    for (VarId x : scope)
        if (x != v) out.scope.push_back(x);
    out.values.assign(std::size_t{1} << out.scope.size(), 0.0);
    const std::size_t low_mask = (std::size_t{1} << vpos) - 1;
    for (std::size_t m = 0; m < (std::size_t{1} << scope.size()); ++m) {
        double p = 1.0;
        for (std::size_t t = 0; t < tables.size() && p != 0.0; ++t) {
            std::size_t idx = 0;
            const auto& pos = positions[t];
            for (std::size_t j = 0; j < pos.size(); ++j)
                if ((m >> pos[j]) & 1U) idx |= std::size_t{1} << j;
            p *= tables[t]->values[idx];
        }
        // Drop bit vpos to index the output.
        const std::size_t reduced = (m & low_mask) | ((m >> (vpos + 1)) << vpos);
        out.values[reduced] += p;
    }
    return out;
}

}  // namespace

VEResult run_minibucket(const GraphicalModel& m, std::size_t i_bound, const OrderingSpec& ordering) {
    if (i_bound < 1) throw InvalidParams("i_bound must be at least 1");
    VEResult result;
    result.eliminated_order = elimination_order(m, ordering);
    const auto& order = result.eliminated_order;

    constexpr std::size_t kUnordered = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> position(m.num_vars(), kUnordered);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

    double log10_z = m.log10_scale();
    bool zero = false;
    std::vector<std::vector<Table>> buckets(order.size());

    auto place = [&](Table t) {
        result.peak_terms = std::max(result.peak_terms, t.values.size());
        const double top = *std::max_element(t.values.begin(), t.values.end());
        if (top <= 0.0) {
            zero = true;
            return;
        }
        log10_z += std::log10(top);
        for (double& x : t.values) x /= top;
        std::size_t first = kUnordered;
        for (VarId v : t.scope) first = std::min(first, position[v]);
        if (first != kUnordered) buckets[first].push_back(std::move(t));
    };
    for (const auto& f : m.factors()) place(from_dense(f));

    for (std::size_t i = 0; i < order.size() && !zero; ++i) {
        auto bucket = std::move(buckets[i]);
        if (bucket.empty()) {
            log10_z += std::log10(2.0);
            continue;
        }
        std::stable_sort(bucket.begin(), bucket.end(),
                         [](const Table& a, const Table& b) { return a.scope.size() > b.scope.size(); });

        // First-fit partition by union scope size.
        std::vector<std::vector<const Table*>> pieces;
        std::vector<std::vector<VarId>> piece_scopes;
        for (const Table& t : bucket) {
            bool fitted = false;
            for (std::size_t p = 0; p < pieces.size() && !fitted; ++p) {
                auto merged = merged_scope(piece_scopes[p], t.scope);
                if (merged.size() <= i_bound) {
                    pieces[p].push_back(&t);
                    piece_scopes[p] = std::move(merged);
                    fitted = true;
                }
            }
            if (!fitted) {
                pieces.push_back({&t});
                piece_scopes.push_back(t.scope);
            }
        }
        for (const auto& piece : pieces) {
            place(multiply_and_sum_out(piece, order[i]));
            if (zero) break;
        }
    }
    result.log10_Z = zero ? -std::numeric_limits<double>::infinity() : log10_z;
    return result;
}

}  // namespace fve
