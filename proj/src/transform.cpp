#include "fourierve/transform.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "fourierve/error.hpp"

namespace fve {

namespace {

std::size_t checked_arity(std::size_t n) {
    if (!std::has_single_bit(n)) throw InvalidParams("WHT length must be a power of two");
    return static_cast<std::size_t>(std::countr_zero(n));
}

void guard(std::size_t k) {
    if (k > kMaxDenseVars)
        throw ScopeTooLarge("dense transform over " + std::to_string(k) +
                            " variables exceeds the limit of " + std::to_string(kMaxDenseVars));
}

}  // namespace

void wht_forward_inplace(std::span<double> data) {
    checked_arity(data.size());
    const std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                // a: bit clear (x = -1), b: bit set (x = +1)
                const double a = data[j];
                const double b = data[j + h];
                data[j] = 0.5 * (a + b);
                data[j + h] = 0.5 * (b - a);
            }
        }
    }
}

void wht_inverse_inplace(std::span<double> data) {
    checked_arity(data.size());
    const std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double c0 = data[j];
                const double c1 = data[j + h];
                data[j] = c0 - c1;
                data[j + h] = c0 + c1;
            }
        }
    }
}

FourierFactor wht_forward(const DenseTable& table) {
    const std::size_t k = table.arity();
    guard(k);
    std::vector<double> coeffs(table.values().begin(), table.values().end());
    wht_forward_inplace(coeffs);

    // Keys are built in ascending id order, so sort positions by id once.
    const auto& scope = table.scope();
    std::vector<std::size_t> by_id(k);
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](auto a, auto b) { return scope[a] < scope[b]; });

    FourierFactor::TermMap terms;
    terms.reserve(coeffs.size());
    std::vector<VarId> vars;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0.0) continue;
        vars.clear();
        for (std::size_t pos : by_id)
            if ((m >> pos) & 1U) vars.push_back(scope[pos]);
        terms.emplace(TermKey::from_sorted(vars), coeffs[m]);
    }
    std::vector<VarId> sorted_scope = scope;
    std::sort(sorted_scope.begin(), sorted_scope.end());
    return FourierFactor::from_trusted(std::move(sorted_scope), std::move(terms));
}

DenseTable wht_inverse(const FourierFactor& factor, std::span<const VarId> scope_order) {
    const std::size_t k = scope_order.size();
    guard(k);
    std::unordered_map<VarId, std::size_t> position;
    for (std::size_t j = 0; j < k; ++j) position.emplace(scope_order[j], j);

    std::vector<double> data(std::size_t{1} << k, 0.0);
    for (const auto& [key, c] : factor.terms()) {
        std::size_t index = 0;
        for (VarId v : key.vars()) {
            auto it = position.find(v);
            if (it == position.end())
                throw ScopeMismatch("wht_inverse: variable " + std::to_string(v) +
                                    " not in the target scope");
            index |= std::size_t{1} << it->second;
        }
        data[index] = c;
    }
    wht_inverse_inplace(data);
    return DenseTable({scope_order.begin(), scope_order.end()}, std::move(data));
}

}  // namespace fve
