#include <doctest.h>

#include <cmath>

#include "fourierve/error.hpp"
#include "fourierve/generators.hpp"
#include "fourierve/spectrum.hpp"
#include "support.hpp"

using namespace fve;

TEST_CASE("full_spectrum") {
    SUBCASE("parity factor") {
        // Table of x1 * x2, shifted to stay nonnegative would change the
        // spectrum, so use the model container directly with |x1 x2| = 1.
        const GraphicalModel m(2, {DenseTable({0, 1}, {1.0, 0.0, 0.0, 1.0})});
        const auto s = full_spectrum(m);
        CHECK(s.profile.weights[0] == doctest::Approx(0.25));
        CHECK(s.profile.weights[1] == 0.0);
        CHECK(s.profile.weights[2] == doctest::Approx(0.25));
    }
    SUBCASE("uniform model") {
        std::vector<DenseTable> factors;
        for (VarId v = 0; v < 5; ++v) factors.emplace_back(std::vector<VarId>{v}, std::vector<double>{3.0, 3.0});
        const auto s = full_spectrum(GraphicalModel(5, factors));
        CHECK(s.profile.weights[0] == 1.0);
        for (std::size_t k = 1; k <= 5; ++k) CHECK(s.profile.weights[k] == 0.0);
    }
    SUBCASE("Parseval on a 20-variable weighted 3-SAT instance") {
        const auto s = full_spectrum(gen_weighted_ksat(20, 60, 3, 0.1, 8));
        CHECK(s.profile.weights.size() == 21);
        CHECK(std::abs(s.profile.total() - s.mean_square) < 1e-8);
    }
    SUBCASE("agrees with the naive transform") {
        Rng rng(2);
        const auto m = normalize_contractive(test::random_model(rng, 6, 5, 3));
        std::vector<double> values(64, 1.0);
        test::for_each_assignment(m.free_vars(), [&](const Assignment& a, std::size_t idx) {
            for (const auto& f : m.factors()) values[idx] *= f.at(a);
        });
        std::vector<double> expected(7, 0.0);
        for (const auto& [key, c] : test::naive_coefficients(DenseTable(m.free_vars(), values)))
            expected[key.degree()] += c * c;
        const auto s = full_spectrum(m);
        for (std::size_t k = 0; k < 7; ++k) CHECK(s.profile.weights[k] == doctest::Approx(expected[k]).epsilon(1e-12));
    }
    SUBCASE("too many variables") { CHECK_THROWS_AS(full_spectrum(GraphicalModel(23, {})), TooManyVariables); }
}

TEST_CASE("concentration_degree") {
    CHECK(concentration_degree({{1.0, 0.0, 0.0}}, 1e-9) == 0);
    CHECK(concentration_degree({{0.5, 0.3, 0.2}}, 0.25) == 1);
    CHECK(concentration_degree({{0.5, 0.3, 0.2}}, 0.1) == 2);
    CHECK(concentration_degree({{5.0, 3.0, 2.0}}, 0.25, true) == 1);
    CHECK_THROWS_AS(concentration_degree({{1.0}}, 0.0), InvalidParams);
}

TEST_CASE("spectrum_experiment") {
    SUBCASE("one instance, one cell reproduces the instance profile") {
        SpectrumExperimentParams p;
        p.n = 10;
        p.nc_list = {20};
        p.eta_list = {0.3};
        p.instances_per_cell = 1;
        p.seed = 5;
        const auto ex = spectrum_experiment(p);
        const auto s = full_spectrum(gen_weighted_ksat(10, 20, 3, 0.3, derive_seed(5, 0)));
        REQUIRE(ex.rows.size() == 11);
        for (std::size_t k = 0; k <= 10; ++k) {
            CHECK(ex.rows[k].degree == k);
            CHECK(ex.rows[k].median_wk == s.profile.weights[k]);
        }
        CHECK(ex.max_parseval_rel_error < 1e-8);
    }
    SUBCASE("rows sorted by eta, nc, degree and CSV schema") {
        SpectrumExperimentParams p;
        p.n = 8;
        p.nc_list = {16, 8};
        p.eta_list = {0.6, 0.1};
        p.instances_per_cell = 3;
        const auto ex = spectrum_experiment(p);
        CHECK(ex.rows.size() == 4 * 9);
        CHECK(ex.rows.front().eta == 0.1);
        CHECK(ex.rows.front().nc == 8);
        CHECK(ex.rows.back().eta == 0.6);
        CHECK(ex.rows.back().nc == 16);
        CHECK(ex.rows.back().degree == 8);
        const auto csv = to_csv(ex.rows);
        CHECK(csv.rfind("eta,nc,degree,median_wk\n0.1,8,0,", 0) == 0);
        CHECK(csv.find('\r') == std::string::npos);
        CHECK(spectrum_experiment(p).rows.size() == ex.rows.size());
        CHECK(to_csv(spectrum_experiment(p).rows) == csv);
    }
}

TEST_CASE("median") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK(median({1.0, INFINITY, INFINITY}) == INFINITY);
}
