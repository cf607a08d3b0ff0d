#include "fourierve/fourier_factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fourierve/error.hpp"

namespace fve {

FourierFactor::FourierFactor(std::vector<VarId> scope, TermMap terms)
    : scope_(std::move(scope)), terms_(std::move(terms)) {
    std::sort(scope_.begin(), scope_.end());
    scope_.erase(std::unique(scope_.begin(), scope_.end()), scope_.end());
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!std::isfinite(it->second))
            throw InvalidParams("FourierFactor: non-finite coefficient");
        for (VarId v : it->first.vars())
            if (!in_scope(v))
                throw ScopeMismatch("FourierFactor: term variable " + std::to_string(v) +
                                    " outside scope");
        if (it->second == 0.0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

FourierFactor FourierFactor::constant(double value) {
    TermMap terms;
    if (value != 0.0) terms.emplace(TermKey{}, value);
    return FourierFactor({}, std::move(terms));
}

FourierFactor FourierFactor::from_trusted(std::vector<VarId> scope, TermMap terms) {
    FourierFactor f;
    f.scope_ = std::move(scope);
    f.terms_ = std::move(terms);
    return f;
}

bool FourierFactor::in_scope(VarId v) const {
    return std::binary_search(scope_.begin(), scope_.end(), v);
}

double FourierFactor::coefficient(const TermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0.0 : it->second;
}

std::size_t FourierFactor::max_degree() const {
    std::size_t d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, key.degree());
    return d;
}

bool FourierFactor::approx_equal(const FourierFactor& other, double tolerance) const {
    for (const auto& [key, c] : terms_)
        if (!(std::abs(c - other.coefficient(key)) <= tolerance)) return false;
    for (const auto& [key, c] : other.terms_)
        if (!terms_.count(key) && !(std::abs(c) <= tolerance)) return false;
    return true;
}

std::string FourierFactor::to_text() const {
    std::vector<std::pair<const TermKey*, double>> rows;
    rows.reserve(terms_.size());
    for (const auto& [key, c] : terms_) rows.emplace_back(&key, c);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first->degree() != b.first->degree()) return a.first->degree() < b.first->degree();
        return *a.first < *b.first;
    });
    std::string out;
    char buf[40];
    for (const auto& [key, c] : rows) {
        if (key->empty()) {
            out += '-';
        } else {
            bool first = true;
            for (VarId v : key->vars()) {
                if (!first) out += ' ';
                out += std::to_string(v);
                first = false;
            }
        }
        std::snprintf(buf, sizeof buf, " : %.17g\n", c);
        out += buf;
    }
    return out;
}

}  // namespace fve
