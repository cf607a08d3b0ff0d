#include "fourierve/ve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "fourierve/error.hpp"
#include "fourierve/transform.hpp"

namespace fve {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double max_abs_coefficient(const FourierFactor& f) {
    double top = 0.0;
    for (const auto& [key, c] : f.terms()) top = std::max(top, std::abs(c));
    return top;
}

FourierFactor scaled(const FourierFactor& f, double by) {
    FourierFactor::TermMap terms;
    terms.reserve(f.size());
    for (const auto& [key, c] : f.terms()) terms.emplace(key, c * by);
    return FourierFactor::from_trusted(f.scope(), std::move(terms));
}

class FourierElimination {
public:
    FourierElimination(const GraphicalModel& model, const VEConfig& cfg)
        : cfg_(cfg), log10_(model.log10_scale()) {
        result_.eliminated_order = elimination_order(model, cfg.ordering);
        position_.assign(model.num_vars(), kUnordered);
        for (std::size_t i = 0; i < result_.eliminated_order.size(); ++i)
            position_[result_.eliminated_order[i]] = i;
        buckets_.resize(result_.eliminated_order.size());
        for (const auto& table : model.factors()) place(wht_forward(table));
    }

    VEResult run() {
        for (std::size_t i = 0; i < buckets_.size() && !zero_; ++i) eliminate_bucket(i);
        return finish();
    }

private:
    static constexpr std::size_t kUnordered = std::numeric_limits<std::size_t>::max();

    struct Message {
        FourierFactor factor;
        std::size_t seq;
    };

    FourierFactor cap(const FourierFactor& f, std::size_t budget) const {
        return cfg_.exact_mode ? f : truncate(f, cfg_.policy, budget);
    }

    void note_size(std::size_t n) { result_.peak_terms = std::max(result_.peak_terms, n); }

    /// Pulls the largest coefficient magnitude into log10_ so that message
    /// values stay O(1) however many variables are summed.
    FourierFactor rescale(const FourierFactor& f) {
        const double top = max_abs_coefficient(f);
        if (top == 0.0 || top == 1.0) return f;
        log10_ += std::log10(top);
        return scaled(f, 1.0 / top);
    }

    void place(FourierFactor f) {
        note_size(f.size());
        if (f.is_zero()) {
            zero_ = true;
            return;
        }
        std::size_t first = kUnordered;
        for (VarId v : f.scope()) first = std::min(first, position_[v]);
        if (first == kUnordered) {
            // Constant: rescale to +-1 so only the sign remains.
            const double c = f.constant_term();
            if (c < 0.0) sign_ = -sign_;
            log10_ += std::log10(std::abs(c));
            return;
        }
        buckets_[first].push_back({std::move(f), next_seq_++});
    }

    void eliminate_bucket(std::size_t i) {
        auto bucket = std::move(buckets_[i]);
        buckets_[i].clear();
        if (bucket.empty()) {
            log10_ += std::log10(2.0);
            return;
        }
        std::stable_sort(bucket.begin(), bucket.end(), [](const Message& a, const Message& b) {
            if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
            return a.seq < b.seq;
        });

        FourierFactor product = std::move(bucket.front().factor);
        for (std::size_t j = 1; j < bucket.size(); ++j) {
            product = multiply(cap(product, cfg_.multiply_cap), cap(bucket[j].factor, cfg_.multiply_cap));
            note_size(product.size());
            if (product.is_zero()) {
                zero_ = true;
                return;
            }
            product = rescale(product);
        }
        FourierFactor message = cap(eliminate_var(product, result_.eliminated_order[i]), cfg_.store_cap);
        place(rescale(message));
    }

    VEResult finish() {
        if (zero_) {
            if (cfg_.exact_mode) {
                result_.log10_Z = kNegInf;
            } else {
                result_.status = VEResult::Status::Failure;
                result_.raw_constant = 0.0;
                result_.diagnostic = "NonPositiveEstimate: final constant is 0 after truncation";
            }
            return result_;
        }
        if (sign_ < 0) {
            result_.status = VEResult::Status::Failure;
            result_.raw_constant = -std::pow(10.0, log10_);
            std::ostringstream os;
            os.precision(6);
            os << "NonPositiveEstimate: final constant is negative (-10^" << log10_ << ")";
            result_.diagnostic = os.str();
            return result_;
        }
        result_.log10_Z = log10_;
        return result_;
    }

    const VEConfig& cfg_;
    VEResult result_;
    std::vector<std::size_t> position_;
    std::vector<std::vector<Message>> buckets_;
    std::size_t next_seq_ = 0;
    double log10_;
    int sign_ = 1;
    bool zero_ = false;
};

}  // namespace

VEResult run_ve(const GraphicalModel& m, const VEConfig& cfg) {
    if (!cfg.exact_mode) {
        if (cfg.store_cap < 1 || cfg.multiply_cap < 1)
            throw InvalidParams("message caps must be positive");
        if (cfg.multiply_cap > cfg.store_cap)
            throw InvalidParams("multiply_cap must not exceed store_cap");
    }
    std::optional<GraphicalModel> normalized;
    try {
        normalized.emplace(normalize_contractive(m));
    } catch (const AllZeroFactor&) {
        VEResult r;
        r.eliminated_order = elimination_order(m, cfg.ordering);
        r.log10_Z = kNegInf;
        return r;
    }
    return FourierElimination(*normalized, cfg).run();
}

double marginal(const GraphicalModel& m, VarId v, const VEConfig& cfg) {
    if (v >= m.num_vars()) throw UnknownVariable("variable " + std::to_string(v) + " not in model");
    if (m.is_fixed(v)) throw InvalidParams("variable " + std::to_string(v) + " is fixed by evidence");

    VEConfig sub = cfg;
    if (sub.ordering.heuristic == OrderingHeuristic::Given)
        std::erase(sub.ordering.given, v);

    auto run_with = [&](int spin) {
        Evidence e;
        e.set(v, spin);
        VEResult r = run_ve(apply_evidence(m, e), sub);
        if (!r.ok()) throw InferenceFailure(r.diagnostic);
        return r.log10_Z;
    };
    const double plus = run_with(1);
    const double minus = run_with(-1);
    if (plus == kNegInf && minus == kNegInf)
        throw DegenerateMarginal("both restricted partition functions are zero");
    if (plus == kNegInf) return 0.0;
    if (minus == kNegInf) return 1.0;
    return 1.0 / (1.0 + std::pow(10.0, minus - plus));
}

}  // namespace fve
