// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Oracles here are written against the value domain and share no code with the
// transform or elimination paths under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "fourierve/algebra.hpp"
#include "fourierve/compare.hpp"
#include "fourierve/generators.hpp"
#include "fourierve/oracle.hpp"
#include "fourierve/spectrum.hpp"
#include "fourierve/transform.hpp"
#include "fourierve/uai_io.hpp"
#include "fourierve/ve.hpp"
#include "support.hpp"

using namespace fve;
using fve::test::for_each_assignment;
using fve::test::random_scope;
using fve::test::random_table;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// sum_S c_S prod_{v in S} x_v, straight from the term map.
double naive_eval(const FourierFactor& f, const Assignment& a) {
    double total = 0.0;
    for (const auto& [key, c] : f.terms()) {
        double chi = c;
        for (VarId v : key.vars()) chi *= *a.get(v);
        total += chi;
    }
    return total;
}

std::vector<VarId> table_scope(const DenseTable& t) {
    return {t.scope().begin(), t.scope().end()};
}

void criterion_round_trip() {
    Rng rng(101);
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto t = random_table(rng, random_scope(rng, 40, rng.below(13)));
        const auto scope = table_scope(t);
        const auto back = wht_inverse(wht_forward(t), scope);
        worst = std::max(worst, fve::test::max_abs_diff(back.values(), t.values()));
    }
    const double secs = seconds_since(t0);
    report(1, "transform round trip", worst < 1e-12 && secs < 5.0,
           fmt("1000 tables k<=12, max err %.3g (< 1e-12), %.2fs (< 5s)", worst, secs));
}

void criterion_parseval() {
    Rng rng(202);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto t = random_table(rng, random_scope(rng, 40, rng.below(13)));
        double mean_sq = 0.0;
        for (double v : t.values()) mean_sq += v * v;
        mean_sq /= static_cast<double>(t.size());
        double coef_sq = 0.0;
        const auto f = wht_forward(t);
        for (const auto& [key, c] : f.terms()) coef_sq += c * c;
        worst = std::max(worst, std::abs(coef_sq - mean_sq));
    }
    report(2, "Parseval identity", worst < 1e-10, fmt("1000 factors k<=12, max |sum c^2 - mean f^2| %.3g (< 1e-10)", worst));
}

void criterion_elimination() {
    Rng rng(303);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto t = random_table(rng, random_scope(rng, 40, 1 + rng.below(12)));
        const auto scope = table_scope(t);
        const std::size_t j = rng.below(static_cast<std::uint32_t>(scope.size()));
        const VarId v = scope[j];
        std::vector<VarId> rest = scope;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));

        // value-domain sum-out: bit j of the index is v
        std::vector<double> summed(std::size_t{1} << rest.size());
        for (std::size_t x = 0; x < t.size(); ++x) {
            const std::size_t low = x & ((std::size_t{1} << j) - 1);
            const std::size_t high = x >> (j + 1);
            summed[low | (high << j)] += t[x];
        }
        const auto got = wht_inverse(eliminate_var(wht_forward(t), v), rest);
        worst = std::max(worst, fve::test::max_abs_diff(got.values(), summed));
    }
    report(3, "elimination matches value-domain sum-out", worst < 1e-12,
           fmt("1000 factors k<=12, max err %.3g (< 1e-12)", worst));
}

void criterion_multiplication() {
    Rng rng(404);
    double term_err = 0.0, point_err = 0.0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t universe = 4 + rng.below(7);  // union scope <= 10
        const auto f = fve::test::random_factor(rng, random_scope(rng, universe, rng.below(universe + 1)),
                                                rng.uniform(0.1, 1.0));
        const auto g = fve::test::random_factor(rng, random_scope(rng, universe, rng.below(universe + 1)),
                                                rng.uniform(0.1, 1.0));
        const auto sparse = multiply_sparse(f, g);
        const auto dense = multiply_dense(f, g);
        for (const auto& [key, c] : sparse.terms()) term_err = std::max(term_err, std::abs(c - dense.coefficient(key)));
        for (const auto& [key, c] : dense.terms()) term_err = std::max(term_err, std::abs(c - sparse.coefficient(key)));

        // pointwise error relative to ||f||_1 ||g||_1, the magnitude bound on any product value
        double scale = 0.0, gl1 = 0.0;
        for (const auto& [key, c] : f.terms()) scale += std::abs(c);
        for (const auto& [key, c] : g.terms()) gl1 += std::abs(c);
        scale = std::max(1.0, scale * gl1);
        std::vector<VarId> all(universe);
        for (std::size_t v = 0; v < universe; ++v) all[v] = static_cast<VarId>(v);
        for_each_assignment(all, [&](const Assignment& a, std::size_t) {
            const double want = naive_eval(f, a) * naive_eval(g, a);
            point_err = std::max({point_err, std::abs(naive_eval(sparse, a) - want) / scale,
                                  std::abs(naive_eval(dense, a) - want) / scale});
        });
    }
    report(4, "sparse and dense multiplication agree", term_err < 1e-12 && point_err < 1e-12,
           fmt("500 pairs, union<=10: term diff %.3g (< 1e-12), pointwise rel err %.3g (< 1e-12)", term_err, point_err));
}

// Mixed pool of small models, every one enumerable.
GraphicalModel small_model(std::uint64_t seed, int kind) {
    Rng rng(seed);
    switch (kind % 4) {
        case 0: {
            const std::size_t n = 8 + rng.below(9);
            return gen_weighted_ksat(n, n + rng.below(3 * static_cast<std::uint32_t>(n)), 3, rng.uniform(0.05, 0.9),
                                     seed);
        }
        case 1:
            return gen_ising_grid(3 + rng.below(2), rng.uniform(0.2, 1.5), rng.uniform(0.0, 0.5), rng.bernoulli(0.5),
                                  seed);
        case 2: {
            BackdoorParams p;
            p.num_vars = 12 + rng.below(5);
            p.num_random_factors = 6 + rng.below(12);
            p.num_triples = 1 + rng.below(3);
            p.base_coupling = rng.uniform(0.05, 1.0);
            p.linked = rng.bernoulli(0.5);
            return gen_backdoor(p, seed);
        }
        default:
            return fve::test::random_model(rng, 6 + rng.below(11), 4 + rng.below(16), 4);
    }
}

void criterion_exact_end_to_end() {
    const auto t0 = Clock::now();
    double z_err = 0.0, m_err = 0.0, naive_err = 0.0;
    std::size_t marginals = 0;
    for (int i = 0; i < 200; ++i) {
        const auto m = small_model(derive_seed(505, i), i % 3);  // ksat, grid, backdoor
        const double truth = brute_force_log10Z(m);
        naive_err = std::max(naive_err, std::abs(truth - std::log10(fve::test::naive_partition_function(m))));
        const auto res = run_ve(m, VEConfig::exact());
        z_err = std::max(z_err, res.ok() ? std::abs(res.log10_Z - truth) : std::numeric_limits<double>::infinity());
        for (VarId v : m.free_vars()) {
            m_err = std::max(m_err, std::abs(marginal(m, v, VEConfig::exact()) - brute_force_marginal(m, v)));
            ++marginals;
        }
    }
    const double secs = seconds_since(t0);
    report(5, "exact-mode end to end", z_err < 1e-9 && m_err < 1e-9 && naive_err < 1e-9 && secs < 120.0,
           fmt("200 models n<=16: |dlog10Z| %.3g, %zu marginals max err %.3g (< 1e-9), "
               "oracle cross-check %.3g, %.1fs (< 120s)",
               z_err, marginals, m_err, naive_err, secs));
}

void criterion_decision_trees() {
    Rng rng(606);
    double worst = 0.0;
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 4 + rng.below(13);
        const std::size_t depth = 1 + rng.below(static_cast<std::uint32_t>(std::min<std::size_t>(6, n)));
        const auto f = wht_forward(gen_decision_tree_fn(n, depth, derive_seed(606, i)));
        for (const auto& [key, c] : f.terms())
            if (key.degree() > depth) {
                worst = std::max(worst, std::abs(c));
                ++checked;
            }
    }
    report(6, "decision trees have no weight above their depth", worst < 1e-12,
           fmt("200 trees n<=16 depth<=6: %zu high-degree coefficients, max |c| %.3g (< 1e-12)", checked, worst));
}

void criterion_concentration(const std::string& csv_path) {
    const auto t0 = Clock::now();
    SpectrumExperimentParams p;
    p.n = 20;
    p.k = 3;
    p.nc_list = {40, 60, 80};
    p.eta_list = {0.1, 0.6};
    p.instances_per_cell = 20;
    p.seed = 707;
    p.epsilon = 1e-3;
    const auto ex = spectrum_experiment(p);

    bool monotone = true;
    for (std::size_t r = 1; r < ex.rows.size(); ++r) {
        const auto& a = ex.rows[r - 1];
        const auto& b = ex.rows[r];
        if (a.eta == b.eta && a.nc == b.nc && a.degree >= 5 && b.degree == a.degree + 1 &&
            b.median_wk > 10.0 * a.median_wk)
            monotone = false;
    }
    bool written = false;
    {
        std::ofstream out(csv_path);
        out << to_csv(ex.rows);
        written = static_cast<bool>(out);
    }
    std::string degrees;
    for (const auto& c : ex.cells) degrees += fmt(" (eta=%g,nc=%zu)->%g", c.eta, c.nc, c.median_concentration_degree);
    const double secs = seconds_since(t0);
    report(7, "low-degree concentration", ex.max_parseval_rel_error < 1e-8 && monotone && written && secs < 600.0,
           fmt("Parseval rel err %.3g (< 1e-8), W_k non-increasing k>=5 within x10: %s, csv %s, %.1fs (< 600s); "
               "median concentration degree at rel eps 1e-3:",
               ex.max_parseval_rel_error, monotone ? "yes" : "no", csv_path.c_str(), secs) +
               degrees);
}

void criterion_grid_comparison() {
    const auto t0 = Clock::now();
    CompareParams p;
    p.suite = Suite::Grid;
    p.instances = 20;
    p.seed = 808;
    p.side = 10;
    p.coupling = 1.0;
    p.field = 0.1;
    p.mixed = true;
    p.store_cap = p.multiply_cap = 1024;
    p.i_bound = 10;
    const auto r = run_compare(p);
    const double maxcoef = r.median_error.at("fourier-maxcoef");
    const double mindeg = r.median_error.at("fourier-mindeg");
    const double mb = r.median_error.at("minibucket");
    const bool all_exact = std::all_of(r.truth_source.begin(), r.truth_source.end(),
                                       [](const std::string& s) { return s == "exact-ve"; });
    const double secs = seconds_since(t0);
    report(8, "grid comparison ordering", maxcoef < mb && mindeg < mb && all_exact && secs < 900.0,
           fmt("20 10x10 mixed grids, truth exact VE: %s, median |dlog10Z| maxcoef %.3g, mindeg %.3g, minibucket(i=10) %.3g; "
               "%.1fs (< 900s)",
               all_exact ? "yes" : "no", maxcoef, mindeg, mb, secs));
}

void criterion_backdoor() {
    double exact_err = 0.0;
    std::string capped;
    for (bool linked : {false, true}) {
        for (std::size_t cap : {std::size_t{1024}, std::size_t{8}}) {
            std::vector<double> errs_max, errs_deg;
            for (int i = 0; i < 20; ++i) {
                const auto m = gen_backdoor({16, 16, 3, 0.5, linked}, derive_seed(909, i));
                const double truth = brute_force_log10Z(m);
                if (cap == 1024) {
                    const auto e = run_ve(m, VEConfig::exact());
                    exact_err = std::max(exact_err, e.ok() ? std::abs(e.log10_Z - truth)
                                                           : std::numeric_limits<double>::infinity());
                }
                for (auto [policy, errs] : {std::pair{TruncationPolicy::MaxCoefficient, &errs_max},
                                            std::pair{TruncationPolicy::MinDegree, &errs_deg}}) {
                    const auto res = run_ve(m, VEConfig::capped(cap, cap, policy));
                    errs->push_back(res.ok() ? std::abs(res.log10_Z - truth) : std::numeric_limits<double>::infinity());
                }
            }
            capped += fmt(" %s cap=%zu maxcoef %.3g mindeg %.3g;", linked ? "linked" : "independent", cap,
                          median(errs_max), median(errs_deg));
        }
    }
    report(9, "backdoor suite", exact_err < 1e-9,
           fmt("n=16, 20 instances each: exact max |dlog10Z| %.3g (< 1e-9); capped medians:", exact_err) + capped);
}

void criterion_uai_round_trip() {
    std::size_t mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const auto m = small_model(derive_seed(1010, i), i);
        const auto back = to_model(parse_uai(write_uai(m)));
        if (brute_force_log10Z(back) != brute_force_log10Z(m)) ++mismatches;
    }
    report(10, "UAI round trip", mismatches == 0, fmt("100 models, %zu with log10Z not bit-identical", mismatches));
}

void criterion_minibucket_bound() {
    double worst = std::numeric_limits<double>::infinity();  // min of (bound - exact)
    for (int i = 0; i < 100; ++i) {
        const auto m = small_model(derive_seed(1111, i), i);
        const std::size_t ibound = 1 + static_cast<std::size_t>(i % 5);
        const auto res = run_minibucket(m, ibound);
        const double slack = res.ok() ? res.log10_Z - brute_force_log10Z(m) : -std::numeric_limits<double>::infinity();
        worst = std::min(worst, slack);
    }
    report(11, "mini-bucket upper bound", worst >= -1e-9,
           fmt("100 models, min (bound - exact) %.3g (>= -1e-9)", worst));
}

}  // namespace

int main(int argc, char** argv) {
    const std::string csv = argc > 1 ? argv[1] : "acceptance_spectrum.csv";
    const auto t0 = Clock::now();
    const std::vector<std::function<void()>> criteria = {
        criterion_round_trip,       criterion_parseval,         criterion_elimination,
        criterion_multiplication,   criterion_exact_end_to_end, criterion_decision_trees,
        [&] { criterion_concentration(csv); },
        criterion_grid_comparison,  criterion_backdoor,         criterion_uai_round_trip,
        criterion_minibucket_bound,
    };
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), "criterion threw", false, e.what());
        }
    }
    std::printf("%d of %zu criteria failed, %.1fs total\n", failures, criteria.size(), seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
