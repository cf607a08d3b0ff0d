#include "fourierve/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "fourierve/error.hpp"
#include "fourierve/rng.hpp"
#include "fourierve/transform.hpp"
#include "local_frame.hpp"

namespace fve {

namespace {

std::vector<VarId> scope_without(const std::vector<VarId>& scope, VarId v) {
    std::vector<VarId> out;
    out.reserve(scope.size());
    for (VarId id : scope)
        if (id != v) out.push_back(id);
    return out;
}

void drop_zeros(FourierFactor::TermMap& terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0.0; });
}

FourierFactor multiply_by_masks(const FourierFactor& f, const FourierFactor& g,
                                std::vector<VarId> scope) {
    const detail::LocalFrame frame(scope);
    auto to_masks = [&](const FourierFactor& h) {
        std::vector<std::pair<std::uint64_t, double>> out;
        out.reserve(h.size());
        for (const auto& [key, c] : h.terms()) out.emplace_back(frame.mask_of(key), c);
        return out;
    };
    const auto fm = to_masks(f);
    const auto gm = to_masks(g);

    std::unordered_map<std::uint64_t, double> acc;
    acc.reserve(std::min(fm.size() * gm.size(), std::size_t{1} << 20));
    for (const auto& [ms, cs] : fm)
        for (const auto& [mt, ct] : gm) acc[ms ^ mt] += cs * ct;

    FourierFactor::TermMap terms;
    terms.reserve(acc.size());
    for (const auto& [mask, c] : acc)
        if (c != 0.0) terms.emplace(frame.key_of(mask), c);
    return FourierFactor::from_trusted(std::move(scope), std::move(terms));
}

FourierFactor multiply_by_keys(const FourierFactor& f, const FourierFactor& g,
                               std::vector<VarId> scope) {
    FourierFactor::TermMap terms;
    for (const auto& [s, cs] : f.terms())
        for (const auto& [t, ct] : g.terms()) terms[s.symmetric_difference(t)] += cs * ct;
    drop_zeros(terms);
    return FourierFactor::from_trusted(std::move(scope), std::move(terms));
}

double dense_cost(std::size_t n) {
    return static_cast<double>(n) * std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(n, 1000)));
}

}  // namespace

double evaluate(const FourierFactor& f, const Assignment& a) {
    for (VarId v : f.scope())
        if (!a.contains(v)) throw MissingAssignment("no value for variable " + std::to_string(v));
    double sum = 0.0;
    for (const auto& [key, c] : f.terms()) {
        double term = c;
        for (VarId v : key.vars()) term *= *a.get(v);
        sum += term;
    }
    return sum;
}

FourierFactor multiply_sparse(const FourierFactor& f, const FourierFactor& g) {
    auto scope = detail::union_scope(f.scope(), g.scope());
    if (scope.size() <= 64) return multiply_by_masks(f, g, std::move(scope));
    return multiply_by_keys(f, g, std::move(scope));
}

FourierFactor multiply_dense(const FourierFactor& f, const FourierFactor& g) {
    auto scope = detail::union_scope(f.scope(), g.scope());
    if (scope.size() > kMaxDenseVars)
        throw ScopeTooLarge("multiply_dense: union scope of " + std::to_string(scope.size()) +
                            " variables exceeds the limit of " + std::to_string(kMaxDenseVars));
    const detail::LocalFrame frame(scope);
    const std::size_t n = std::size_t{1} << scope.size();
    auto to_values = [&](const FourierFactor& h) {
        std::vector<double> data(n, 0.0);
        for (const auto& [key, c] : h.terms()) data[frame.mask_of(key)] = c;
        wht_inverse_inplace(data);
        return data;
    };
    auto product = to_values(f);
    const auto other = to_values(g);
    for (std::size_t m = 0; m < n; ++m) product[m] *= other[m];
    wht_forward_inplace(product);

    FourierFactor::TermMap terms;
    terms.reserve(n);
    for (std::size_t m = 0; m < n; ++m)
        if (product[m] != 0.0) terms.emplace(frame.key_of(m), product[m]);
    return FourierFactor::from_trusted(std::move(scope), std::move(terms));
}

MultiplyPath choose_multiply_path(const FourierFactor& f, const FourierFactor& g) {
    const std::size_t n = detail::union_scope(f.scope(), g.scope()).size();
    if (n > kMaxDenseVars) return MultiplyPath::Sparse;
    const double sparse = static_cast<double>(f.size()) * static_cast<double>(g.size());
    return sparse < dense_cost(n) ? MultiplyPath::Sparse : MultiplyPath::Dense;
}

FourierFactor multiply(const FourierFactor& f, const FourierFactor& g, CostPolicy policy) {
    switch (policy) {
        case CostPolicy::ForceSparse:
            return multiply_sparse(f, g);
        case CostPolicy::ForceDense:
            return multiply_dense(f, g);
        case CostPolicy::Cheapest:
            break;
    }
    return choose_multiply_path(f, g) == MultiplyPath::Sparse ? multiply_sparse(f, g)
                                                               : multiply_dense(f, g);
}

FourierFactor eliminate_var(const FourierFactor& f, VarId v) {
    FourierFactor::TermMap terms;
    terms.reserve(f.size());
    for (const auto& [key, c] : f.terms())
        if (!key.contains(v)) terms.emplace(key, 2.0 * c);
    return FourierFactor::from_trusted(scope_without(f.scope(), v), std::move(terms));
}

FourierFactor restrict(const FourierFactor& f, VarId v, int value) {
    Assignment fixed;
    fixed.set(v, value);
    return restrict(f, fixed);
}

FourierFactor restrict(const FourierFactor& f, const Assignment& fixed) {
    std::vector<VarId> scope;
    for (VarId id : f.scope())
        if (!fixed.contains(id)) scope.push_back(id);
    if (scope.size() == f.scope().size()) return f;

    FourierFactor::TermMap terms;
    terms.reserve(f.size());
    std::vector<VarId> kept;
    for (const auto& [key, c] : f.terms()) {
        double coeff = c;
        kept.clear();
        for (VarId id : key.vars()) {
            if (auto spin = fixed.get(id))
                coeff *= *spin;
            else
                kept.push_back(id);
        }
        terms[TermKey::from_sorted(kept)] += coeff;
    }
    drop_zeros(terms);
    return FourierFactor::from_trusted(std::move(scope), std::move(terms));
}

RandomRestriction random_restriction(const FourierFactor& f, double delta, std::uint64_t seed) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw InvalidParams("random_restriction: delta must lie in (0, 1]");
    Rng rng(seed);
    Assignment fixed;
    std::vector<VarId> retained;
    for (VarId v : f.scope()) {
        if (rng.bernoulli(delta))
            retained.push_back(v);
        else
            fixed.set(v, rng.spin());
    }
    return {restrict(f, fixed), std::move(retained)};
}

FourierFactor truncate(const FourierFactor& f, TruncationPolicy policy, std::size_t budget) {
    if (budget < 1) throw InvalidParams("truncate: budget must be at least 1");
    if (f.size() <= budget) return f;

    using Entry = FourierFactor::TermMap::const_pointer;
    std::vector<Entry> entries;
    entries.reserve(f.size());
    bool has_constant = false;
    for (const auto& kv : f.terms()) {
        if (kv.first.empty())
            has_constant = true;
        else
            entries.push_back(&kv);
    }

    auto by_magnitude = [](Entry a, Entry b) {
        const double ma = std::abs(a->second), mb = std::abs(b->second);
        if (ma != mb) return ma > mb;
        if (a->first.degree() != b->first.degree()) return a->first.degree() < b->first.degree();
        return a->first < b->first;
    };
    auto by_degree = [](Entry a, Entry b) {
        if (a->first.degree() != b->first.degree()) return a->first.degree() < b->first.degree();
        const double ma = std::abs(a->second), mb = std::abs(b->second);
        if (ma != mb) return ma > mb;
        return a->first < b->first;
    };

    const std::size_t keep = has_constant ? budget - 1 : budget;
    const auto middle = entries.begin() + static_cast<std::ptrdiff_t>(keep);
    if (policy == TruncationPolicy::MaxCoefficient)
        std::nth_element(entries.begin(), middle, entries.end(), by_magnitude);
    else
        std::nth_element(entries.begin(), middle, entries.end(), by_degree);

    FourierFactor::TermMap terms;
    terms.reserve(budget);
    if (has_constant) terms.emplace(TermKey{}, f.constant_term());
    for (auto it = entries.begin(); it != middle; ++it) terms.emplace((*it)->first, (*it)->second);
    return FourierFactor::from_trusted(f.scope(), std::move(terms));
}

double SpectrumProfile::total() const {
    double sum = 0.0;
    for (double w : weights) sum += w;
    return sum;
}

double SpectrumProfile::tail_above(std::size_t k) const {
    double sum = 0.0;
    for (std::size_t j = k + 1; j < weights.size(); ++j) sum += weights[j];
    return sum;
}

SpectrumProfile degree_weights(const FourierFactor& f) {
    SpectrumProfile p;
    p.weights.assign(std::max(f.scope().size(), f.max_degree()) + 1, 0.0);
    for (const auto& [key, c] : f.terms()) p.weights[key.degree()] += c * c;
    return p;
}

}  // namespace fve
