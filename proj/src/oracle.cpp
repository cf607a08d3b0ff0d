#include "fourierve/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "fourierve/error.hpp"

namespace fve {

namespace {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct Enumerator {
    // Each factor's scope as bit positions among the enumerated variables.
    std::vector<std::vector<std::size_t>> positions;
    const GraphicalModel* model;
    std::size_t n;

    Enumerator(const GraphicalModel& m, const std::vector<VarId>& vars) : model(&m), n(vars.size()) {
        std::vector<std::size_t> where(m.num_vars(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) where[vars[i]] = i;
        for (const auto& f : m.factors()) {
            std::vector<std::size_t> pos;
            for (VarId v : f.scope()) pos.push_back(where[v]);
            positions.push_back(std::move(pos));
        }
    }

    double weight(std::uint64_t x) const {
        double w = 1.0;
        const auto& factors = model->factors();
        for (std::size_t i = 0; i < factors.size() && w != 0.0; ++i) {
            std::size_t idx = 0;
            const auto& pos = positions[i];
            for (std::size_t j = 0; j < pos.size(); ++j)
                if ((x >> pos[j]) & 1U) idx |= std::size_t{1} << j;
            w *= factors[i][idx];
        }
        return w;
    }
};

/// sum over all x in [0, 2^n) with x & mask == want.
double enumerate(const GraphicalModel& m, std::uint64_t mask, std::uint64_t want) {
    const auto vars = m.free_vars();
    if (vars.size() > kMaxBruteForceVars)
        throw TooManyVariables("brute force supports at most " + std::to_string(kMaxBruteForceVars) +
                               " free variables, model has " + std::to_string(vars.size()));
    const Enumerator e(m, vars);
    const std::uint64_t total = std::uint64_t{1} << vars.size();
    constexpr std::uint64_t kChunks = 64;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / kChunks);
    const std::uint64_t num_chunks = (total + chunk - 1) / chunk;

    auto run_chunk = [&](std::uint64_t c) {
        CompensatedSum s;
        const std::uint64_t end = std::min(total, (c + 1) * chunk);
        for (std::uint64_t x = c * chunk; x < end; ++x)
            if ((x & mask) == want) s.add(e.weight(x));
        return s.value();
    };

    std::vector<double> partial(num_chunks, 0.0);
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    if (workers == 1 || total < (1u << 14)) {
        for (std::uint64_t c = 0; c < num_chunks; ++c) partial[c] = run_chunk(c);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::uint64_t c = w; c < num_chunks; c += workers) partial[c] = run_chunk(c);
            }));
        for (auto& j : jobs) j.get();
    }
    CompensatedSum s;
    for (double p : partial) s.add(p);
    return s.value();
}

double to_log10(double z, double scale) {
    return z > 0.0 ? std::log10(z) + scale : -std::numeric_limits<double>::infinity();
}

}  // namespace

double brute_force_log10Z(const GraphicalModel& m) {
    return to_log10(enumerate(m, 0, 0), m.log10_scale());
}

double brute_force_marginal(const GraphicalModel& m, VarId v) {
    if (v >= m.num_vars()) throw UnknownVariable("variable " + std::to_string(v) + " not in model");
    if (m.is_fixed(v)) throw InvalidParams("variable " + std::to_string(v) + " is fixed by evidence");
    const auto vars = m.free_vars();
    if (vars.size() > kMaxBruteForceVars)
        throw TooManyVariables("brute force supports at most " + std::to_string(kMaxBruteForceVars) +
                               " free variables");
    const auto bit = std::uint64_t{1}
                     << static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    const double plus = enumerate(m, bit, bit);
    const double minus = enumerate(m, bit, 0);
    if (plus + minus == 0.0) throw DegenerateMarginal("both restricted sums are zero");
    return plus / (plus + minus);
}

}  // namespace fve
