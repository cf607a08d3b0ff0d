#include "fourierve/compare.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "fourierve/oracle.hpp"
#include "fourierve/rng.hpp"
#include "fourierve/spectrum.hpp"
#include "fourierve/ve.hpp"

namespace fve {

namespace {

constexpr std::size_t kBruteForceTruthVars = 20;

struct InstanceOutcome {
    double truth = 0.0;
    std::string source;
    std::vector<CompareRecord> records;
};

GraphicalModel make_instance(const CompareParams& p, std::size_t i) {
    const auto seed = derive_seed(p.seed, i);
    if (p.suite == Suite::Grid) return gen_ising_grid(p.side, p.coupling, p.field, p.mixed, seed);
    return gen_backdoor(p.backdoor, seed);
}

template <typename Fn>
std::pair<double, double> timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const double value = fn();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    return {value, took.count()};
}

InstanceOutcome run_instance(const CompareParams& p, std::size_t i) {
    const GraphicalModel m = make_instance(p, i);
    InstanceOutcome out;
    if (m.free_vars().size() <= kBruteForceTruthVars) {
        out.truth = brute_force_log10Z(m);
        out.source = "bruteforce";
    } else {
        const VEResult exact = run_ve(m, VEConfig::exact(p.ordering));
        out.truth = exact.log10_Z;
        out.source = "exact-ve";
    }

    auto error_of = [&](const VEResult& r) {
        if (!r.ok()) return std::numeric_limits<double>::infinity();
        if (r.log10_Z == out.truth) return 0.0;
        return std::abs(r.log10_Z - out.truth);
    };
    for (const auto& method : compare_methods()) {
        auto [err, secs] = timed([&] {
            if (method == "minibucket") return error_of(run_minibucket(m, p.i_bound, p.ordering));
            const auto policy =
                method == "fourier-maxcoef" ? TruncationPolicy::MaxCoefficient : TruncationPolicy::MinDegree;
            return error_of(run_ve(m, VEConfig::capped(p.store_cap, p.multiply_cap, policy, p.ordering)));
        });
        out.records.push_back({i, method, err, secs});
    }
    return out;
}

}  // namespace

const std::vector<std::string>& compare_methods() {
    static const std::vector<std::string> methods{"fourier-maxcoef", "fourier-mindeg", "minibucket"};
    return methods;
}

CompareReport run_compare(const CompareParams& p) {
    std::vector<InstanceOutcome> outcomes(p.instances);
    const unsigned workers = std::max(1u, p.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < p.instances; ++i) outcomes[i] = run_instance(p, i);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < p.instances; i += workers) outcomes[i] = run_instance(p, i);
            }));
        for (auto& j : jobs) j.get();
    }

    CompareReport report;
    std::map<std::string, std::vector<double>> errors;
    for (auto& o : outcomes) {
        report.truth.push_back(o.truth);
        report.truth_source.push_back(o.source);
        for (auto& r : o.records) {
            errors[r.method].push_back(r.abs_log10_err);
            report.records.push_back(std::move(r));
        }
    }
    for (auto& [method, errs] : errors) report.median_error[method] = median(std::move(errs));
    return report;
}

std::string to_csv(const std::vector<CompareRecord>& records) {
    std::string out = "instance,method,abs_log10_err,seconds\n";
    char buf[160];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%zu,%s,%.12g,%.6f\n", r.instance, r.method.c_str(), r.abs_log10_err,
                      r.seconds);
        out += buf;
    }
    return out;
}

}  // namespace fve
