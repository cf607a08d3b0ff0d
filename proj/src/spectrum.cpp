#include "fourierve/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>
#include <tuple>

#include "fourierve/error.hpp"
#include "fourierve/generators.hpp"
#include "fourierve/rng.hpp"
#include "fourierve/transform.hpp"

namespace fve {

FullSpectrum full_spectrum(const GraphicalModel& model) {
    const auto vars = model.free_vars();
    if (vars.size() > kMaxSpectrumVars)
        throw TooManyVariables("full spectrum supports at most " + std::to_string(kMaxSpectrumVars) +
                               " free variables");
    const GraphicalModel m = normalize_contractive(model);
    const std::size_t n = vars.size();
    std::vector<std::size_t> where(m.num_vars(), 0);
    for (std::size_t i = 0; i < n; ++i) where[vars[i]] = i;

    std::vector<double> data(std::size_t{1} << n, 1.0);
    for (const auto& f : m.factors()) {
        std::vector<std::size_t> pos;
        for (VarId v : f.scope()) pos.push_back(where[v]);
        for (std::size_t x = 0; x < data.size(); ++x) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < pos.size(); ++j) idx |= ((x >> pos[j]) & 1U) << j;
            data[x] *= f[idx];
        }
    }

    FullSpectrum out;
    double sq = 0.0;
    for (double x : data) sq += x * x;
    out.mean_square = std::ldexp(sq, -static_cast<int>(n));

    wht_forward_inplace(data);
    out.profile.weights.assign(n + 1, 0.0);
    for (std::size_t s = 0; s < data.size(); ++s)
        out.profile.weights[static_cast<std::size_t>(std::popcount(s))] += data[s] * data[s];
    return out;
}

std::size_t concentration_degree(const SpectrumProfile& p, double epsilon, bool relative) {
    if (!(epsilon > 0.0)) throw InvalidParams("epsilon must be positive");
    const double total = p.total();
    const double scale = relative && total > 0.0 ? total : 1.0;
    for (std::size_t k = 0; k < p.weights.size(); ++k)
        if (p.tail_above(k) / scale < epsilon) return k;
    return p.weights.empty() ? 0 : p.weights.size() - 1;
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

SpectrumExperiment spectrum_experiment(const SpectrumExperimentParams& params) {
    if (params.n > kMaxSpectrumVars) throw TooManyVariables("spectrum experiment needs n <= 22");
    if (params.instances_per_cell < 1) throw InvalidParams("need at least one instance per cell");

    SpectrumExperiment out;
    std::uint64_t cell = 0;
    for (double eta : params.eta_list) {
        for (std::size_t nc : params.nc_list) {
            std::vector<std::vector<double>> by_degree(params.n + 1);
            std::vector<double> degrees;
            for (std::size_t i = 0; i < params.instances_per_cell; ++i) {
                const auto seed = derive_seed(params.seed, (cell << 32) | i);
                const auto spec = full_spectrum(gen_weighted_ksat(params.n, nc, params.k, eta, seed));
                const double total = spec.profile.total();
                out.max_parseval_rel_error = std::max(
                    out.max_parseval_rel_error, std::abs(total - spec.mean_square) / spec.mean_square);
                for (std::size_t d = 0; d <= params.n; ++d) by_degree[d].push_back(spec.profile.weights[d]);
                degrees.push_back(static_cast<double>(concentration_degree(spec.profile, params.epsilon, true)));
            }
            for (std::size_t d = 0; d <= params.n; ++d)
                out.rows.push_back({eta, nc, d, median(by_degree[d])});
            out.cells.push_back({eta, nc, median(degrees)});
            ++cell;
        }
    }
    std::stable_sort(out.rows.begin(), out.rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
        return std::tie(a.eta, a.nc, a.degree) < std::tie(b.eta, b.nc, b.degree);
    });
    return out;
}

std::string to_csv(const std::vector<SpectrumRow>& rows) {
    std::string out = "eta,nc,degree,median_wk\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%zu,%zu,%.12g\n", r.eta, r.nc, r.degree, r.median_wk);
        out += buf;
    }
    return out;
}

}  // namespace fve
