// fve: command-line front end for Fourier-domain variable elimination.
//
// Exit codes: 0 success, 2 usage, 3 parse, 4 inference failure, 5 resource guard.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fourierve/compare.hpp"
#include "fourierve/error.hpp"
#include "fourierve/generators.hpp"
#include "fourierve/oracle.hpp"
#include "fourierve/report.hpp"
#include "fourierve/spectrum.hpp"
#include "fourierve/uai_io.hpp"
#include "fourierve/ve.hpp"

namespace {

using namespace fve;

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kInference = 4, kResource = 5 };

struct InferenceOptions {
    std::string model;
    std::string evidence;
    std::string method = "fourier";
    std::size_t store_cap = std::size_t{1} << 20;
    std::size_t mul_cap = std::size_t{1} << 10;
    std::size_t ibound = 10;
    std::string policy = "maxcoef";
    std::string order = "minfill";
    std::uint64_t seed = 0;
    bool json = false;
};

void add_inference_flags(CLI::App& cmd, InferenceOptions& o, std::vector<std::string> methods) {
    cmd.add_option("model", o.model, "UAI model file")->required();
    cmd.add_option("--evidence", o.evidence, "UAI evidence file");
    cmd.add_option("--method", o.method, "Inference method")->check(CLI::IsMember(methods));
    cmd.add_option("--store-cap", o.store_cap, "Max terms per stored message")->check(CLI::PositiveNumber);
    cmd.add_option("--mul-cap", o.mul_cap, "Max terms per multiplication operand")->check(CLI::PositiveNumber);
    cmd.add_option("--ibound", o.ibound, "Mini-bucket i-bound")->check(CLI::PositiveNumber);
    cmd.add_option("--policy", o.policy, "Truncation policy")->check(CLI::IsMember({"maxcoef", "mindeg"}));
    cmd.add_option("--order", o.order, "Elimination ordering")->check(CLI::IsMember({"mindeg", "minfill"}));
    cmd.add_option("--seed", o.seed, "Seed (echoed; inference is deterministic)");
    cmd.add_flag("--json", o.json, "Machine-readable output");
}

OrderingSpec ordering_of(const std::string& name) {
    return name == "mindeg" ? OrderingSpec::min_degree() : OrderingSpec::min_fill();
}

VEConfig config_of(const InferenceOptions& o) {
    if (o.method == "exact") return VEConfig::exact(ordering_of(o.order));
    return VEConfig::capped(o.store_cap, o.mul_cap,
                            o.policy == "mindeg" ? TruncationPolicy::MinDegree : TruncationPolicy::MaxCoefficient,
                            ordering_of(o.order));
}

GraphicalModel load_model(const InferenceOptions& o) {
    GraphicalModel m = to_model(parse_uai(read_file(o.model)));
    if (!o.evidence.empty()) m = apply_evidence(m, parse_evidence(read_file(o.evidence)));
    return m;
}

int run_infer(const InferenceOptions& o) {
    const GraphicalModel m = load_model(o);
    InferReport report;
    report.model_path = o.model;
    report.evidence_path = o.evidence;
    report.method = o.method;
    report.policy = o.policy;
    report.order = o.order;
    report.store_cap = o.store_cap;
    report.multiply_cap = o.mul_cap;
    report.i_bound = o.ibound;
    report.seed = o.seed;
    report.num_vars = m.num_vars();
    report.num_factors = m.factors().size();

    const auto start = std::chrono::steady_clock::now();
    if (o.method == "bruteforce") {
        report.result.log10_Z = brute_force_log10Z(m);
        report.result.eliminated_order = m.free_vars();
    } else if (o.method == "minibucket") {
        report.result = run_minibucket(m, o.ibound, ordering_of(o.order));
    } else {
        report.result = run_ve(m, config_of(o));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (o.json)
        std::cout << to_json(report).dump() << '\n';
    else
        std::cout << to_text(report);
    return report.result.ok() ? kOk : kInference;
}

int run_marginal(const InferenceOptions& o, const std::vector<VarId>& vars, bool all) {
    const GraphicalModel m = load_model(o);
    std::vector<VarId> targets = all ? m.free_vars() : vars;
    if (targets.empty()) throw InvalidParams("pass --var or --all");
    nlohmann::json records = nlohmann::json::array();
    char buf[96];
    for (VarId v : targets) {
        const double p = o.method == "bruteforce" ? brute_force_marginal(m, v) : marginal(m, v, config_of(o));
        if (o.json) {
            records.push_back({{"var", v}, {"p_plus", p}});
        } else {
            std::snprintf(buf, sizeof buf, "var %u p(+1)=%.15g\n", v, p);
            std::cout << buf;
        }
    }
    if (o.json)
        std::cout << nlohmann::json{{"model", o.model}, {"method", o.method}, {"marginals", records}}.dump() << '\n';
    return kOk;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stod(item));
    return out;
}

std::vector<std::size_t> parse_count_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(std::stoul(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-domain variable elimination for binary graphical models"};
    app.require_subcommand(1);

    InferenceOptions infer_opts;
    auto* infer = app.add_subcommand("infer", "Estimate log10 Z of a UAI model");
    add_inference_flags(*infer, infer_opts, {"fourier", "minibucket", "exact", "bruteforce"});

    InferenceOptions marg_opts;
    std::vector<VarId> marg_vars;
    bool marg_all = false;
    auto* marg = app.add_subcommand("marginal", "Pr(x_v = +1) for selected variables");
    add_inference_flags(*marg, marg_opts, {"fourier", "exact", "bruteforce"});
    marg->add_option("--var", marg_vars, "Variable id (repeatable)");
    marg->add_flag("--all", marg_all, "Every free variable");

    std::string gen_kind, gen_out;
    std::uint64_t gen_seed = 0;
    std::size_t gen_n = 20, gen_nc = 60, gen_k = 3, gen_side = 10, gen_factors = 16, gen_triples = 3, gen_depth = 3;
    double gen_eta = 0.1, gen_coupling = 1.0, gen_field = 0.1;
    bool gen_mixed = false, gen_linked = false;
    auto* gen = app.add_subcommand("generate", "Write a seeded instance as a UAI file");
    gen->add_option("kind", gen_kind, "ksat | ising | backdoor | dtree")
        ->required()
        ->check(CLI::IsMember({"ksat", "ising", "backdoor", "dtree"}));
    gen->add_option("--n", gen_n, "Variables (ksat, backdoor, dtree)");
    gen->add_option("--nc", gen_nc, "Clauses (ksat)");
    gen->add_option("--k", gen_k, "Clause width (ksat)");
    gen->add_option("--eta", gen_eta, "Unsatisfied clause weight (ksat)");
    gen->add_option("--side", gen_side, "Grid side (ising)");
    gen->add_option("--coupling", gen_coupling, "Coupling strength (ising, backdoor)");
    gen->add_option("--field", gen_field, "Field strength (ising)");
    gen->add_flag("--mixed", gen_mixed, "Mixed-sign couplings (ising)");
    gen->add_option("--factors", gen_factors, "Random size-3 factors (backdoor)");
    gen->add_option("--triples", gen_triples, "Equality triples (backdoor)");
    gen->add_flag("--linked", gen_linked, "Chain the triples (backdoor)");
    gen->add_option("--depth", gen_depth, "Tree depth (dtree)");
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("-o,--output", gen_out, "Output .uai file")->required();

    SpectrumExperimentParams spec_params;
    std::string spec_nc = "40,60,80", spec_eta = "0.1,0.6", spec_out;
    auto* spec = app.add_subcommand("spectrum", "Per-degree weight sweep over weighted k-SAT");
    spec->add_option("--n", spec_params.n, "Variables (<= 22)");
    spec->add_option("--k", spec_params.k, "Clause width");
    spec->add_option("--nc", spec_nc, "Comma-separated clause counts");
    spec->add_option("--eta", spec_eta, "Comma-separated eta values");
    spec->add_option("--instances", spec_params.instances_per_cell, "Instances per cell");
    spec->add_option("--epsilon", spec_params.epsilon, "Relative epsilon for the concentration degree");
    spec->add_option("--seed", spec_params.seed, "Seed");
    spec->add_option("-o,--output", spec_out, "Output CSV (default stdout)");

    CompareParams cmp;
    std::string cmp_suite = "grid", cmp_out;
    std::size_t cmp_cap = 1024;
    auto* compare = app.add_subcommand("compare", "Error of approximate methods against ground truth");
    compare->add_option("--suite", cmp_suite, "grid | backdoor")->check(CLI::IsMember({"grid", "backdoor"}));
    compare->add_option("--instances", cmp.instances, "Instances");
    compare->add_option("--seed", cmp.seed, "Seed");
    compare->add_option("--side", cmp.side, "Grid side");
    compare->add_option("--coupling", cmp.coupling, "Coupling strength (grid: mixed)");
    compare->add_option("--field", cmp.field, "Field strength (grid)");
    compare->add_option("--n", cmp.backdoor.num_vars, "Variables (backdoor)");
    compare->add_option("--factors", cmp.backdoor.num_random_factors, "Random factors (backdoor)");
    compare->add_option("--triples", cmp.backdoor.num_triples, "Equality triples (backdoor)");
    compare->add_option("--base-coupling", cmp.backdoor.base_coupling, "Random factor strength (backdoor)");
    compare->add_flag("--linked", cmp.backdoor.linked, "Chain the triples (backdoor)");
    compare->add_option("--cap", cmp_cap, "Store and multiply cap for Fourier VE")->check(CLI::PositiveNumber);
    compare->add_option("--ibound", cmp.i_bound, "Mini-bucket i-bound")->check(CLI::PositiveNumber);
    compare->add_option("--workers", cmp.workers, "Parallel workers");
    compare->add_option("-o,--output", cmp_out, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*infer) return run_infer(infer_opts);
        if (*marg) return run_marginal(marg_opts, marg_vars, marg_all);
        if (*gen) {
            GraphicalModel m(0, {});
            std::ostringstream echo;
            echo << "generate " << gen_kind << " seed=" << gen_seed;
            if (gen_kind == "ksat") {
                m = gen_weighted_ksat(gen_n, gen_nc, gen_k, gen_eta, gen_seed);
                echo << " n=" << gen_n << " nc=" << gen_nc << " k=" << gen_k << " eta=" << gen_eta;
            } else if (gen_kind == "ising") {
                m = gen_ising_grid(gen_side, gen_coupling, gen_field, gen_mixed, gen_seed);
                echo << " side=" << gen_side << " coupling=" << gen_coupling << " field=" << gen_field
                     << " mixed=" << gen_mixed;
            } else if (gen_kind == "backdoor") {
                m = gen_backdoor({gen_n, gen_factors, gen_triples, gen_coupling, gen_linked}, gen_seed);
                echo << " n=" << gen_n << " factors=" << gen_factors << " triples=" << gen_triples
                     << " coupling=" << gen_coupling << " linked=" << gen_linked;
            } else {
                m = GraphicalModel(gen_n, {gen_decision_tree_fn(gen_n, gen_depth, gen_seed)});
                echo << " n=" << gen_n << " depth=" << gen_depth;
            }
            write_text(gen_out, write_uai(m));
            std::cout << echo.str() << " -> " << gen_out << " (" << m.num_vars() << " vars, " << m.factors().size()
                      << " factors)\n";
            return kOk;
        }
        if (*spec) {
            spec_params.nc_list = parse_count_list(spec_nc);
            spec_params.eta_list = parse_real_list(spec_eta);
            const auto ex = spectrum_experiment(spec_params);
            write_text(spec_out, to_csv(ex.rows));
            for (const auto& c : ex.cells)
                std::cerr << "eta=" << c.eta << " nc=" << c.nc
                          << " median concentration degree (relative eps=" << spec_params.epsilon
                          << ") = " << c.median_concentration_degree << '\n';
            std::cerr << "max Parseval relative error = " << ex.max_parseval_rel_error << '\n';
            return kOk;
        }
        if (*compare) {
            cmp.suite = cmp_suite == "grid" ? Suite::Grid : Suite::Backdoor;
            cmp.store_cap = cmp.multiply_cap = cmp_cap;
            const auto report = run_compare(cmp);
            write_text(cmp_out, to_csv(report.records));
            std::cerr << "suite=" << cmp_suite << " instances=" << cmp.instances << " seed=" << cmp.seed
                      << " cap=" << cmp_cap << " ibound=" << cmp.i_bound << '\n';
            for (const auto& [method, err] : report.median_error)
                std::cerr << "median |dlog10 Z| " << method << " = " << err << '\n';
            return kOk;
        }
    } catch (const InferenceFailure& e) {
        std::cerr << "FAILED " << e.what() << '\n';
        return kInference;
    } catch (const DegenerateMarginal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInference;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CountMismatch& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const CardinalityUnsupported& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const TooManyVariables& e) {
        std::cerr << "error: TooManyVariables: " << e.what() << '\n';
        return kResource;
    } catch (const ScopeTooLarge& e) {
        std::cerr << "error: ScopeTooLarge: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
