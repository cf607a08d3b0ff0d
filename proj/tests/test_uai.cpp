#include <doctest.h>

#include "fourierve/error.hpp"
#include "fourierve/generators.hpp"
#include "fourierve/oracle.hpp"
#include "fourierve/uai_io.hpp"
#include "support.hpp"

using namespace fve;

TEST_CASE("parse_uai minimal document") {
    const auto doc = parse_uai("MARKOV 1 2 1 1 0 2 0.3 0.7");
    CHECK(doc.network_type == NetworkType::Markov);
    CHECK(doc.cardinalities == std::vector<int>{2});
    REQUIRE(doc.factor_tables.size() == 1);
    CHECK(doc.factor_tables[0] == std::vector<double>{0.3, 0.7});

    const auto m = to_model(doc);
    Assignment minus, plus;
    minus.set(0, -1);
    plus.set(0, 1);
    CHECK(m.factors()[0].at(minus) == 0.3);
    CHECK(m.factors()[0].at(plus) == 0.7);
}

TEST_CASE("UAI tables are row-major with the last scope variable fastest") {
    const auto doc = parse_uai("MARKOV\n2\n2 2\n1\n2 0 1\n\n4\n 1 2 3 4\n");
    // Reference reading: row index = state(x0) * 2 + state(x1).
    const auto& table = doc.factor_tables[0];
    auto reference = [&](int s0, int s1) { return table[static_cast<std::size_t>(s0 * 2 + s1)]; };
    CHECK(reference(0, 1) == 2.0);

    const auto m = to_model(doc);
    for (int s0 = 0; s0 < 2; ++s0) {
        for (int s1 = 0; s1 < 2; ++s1) {
            Assignment a;
            a.set(0, s0 ? 1 : -1);
            a.set(1, s1 ? 1 : -1);
            CHECK(m.factors()[0].at(a) == reference(s0, s1));
        }
    }
}

TEST_CASE("parse_uai errors") {
    CHECK_THROWS_AS(parse_uai("MARKOV 1 2 1 1 0 2 0.3"), CountMismatch);
    CHECK_THROWS_AS(parse_uai("MARKOV 2 2 2 1"), CountMismatch);
    CHECK_THROWS_AS(parse_uai("MARKOV 1 2 1 1 0 3 0.3 0.7 0.1"), CountMismatch);
    CHECK_THROWS_AS(parse_uai("MARKOV 1 3 1 1 0 3 0.3 0.7 0.1"), CardinalityUnsupported);
    CHECK_THROWS_AS(parse_uai("FACTOR 1 2 1 1 0 2 0.3 0.7"), SyntaxError);
    CHECK_THROWS_AS(parse_uai("MARKOV 1 2 1 1 0 2 0.3 abc"), SyntaxError);
    CHECK_THROWS_AS(parse_uai("c comment\nMARKOV 1 2 1 1 0 2 0.3 0.7"), SyntaxError);
    CHECK_THROWS_AS(parse_uai("MARKOV 1 2 1 1 0 2 0.3 0.7 # trailing"), SyntaxError);
    CHECK_THROWS_AS(parse_uai("MARKOV 1 2 1 1 4 2 0.3 0.7"), SyntaxError);
    CHECK_THROWS_AS(parse_uai("MARKOV 1 2 1 1 0 2 0.3 -0.7"), SyntaxError);
    try {
        parse_uai("MARKOV 1 2 1 1 0 2 0.3 x7");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 23);
    }
}

TEST_CASE("BAYES documents become plain factors") {
    // P(x0) P(x1 | x0): Z of a proper network is 1.
    const auto doc = parse_uai("BAYES 2 2 2 2 1 0 2 0 1 2 0.4 0.6 4 0.9 0.1 0.2 0.8");
    CHECK(doc.network_type == NetworkType::Bayes);
    const auto m = to_model(doc);
    CHECK(brute_force_log10Z(m) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("to_model rejects hand-built non-binary documents") {
    UaiDocument doc;
    doc.cardinalities = {3};
    CHECK_THROWS_AS(to_model(doc), CardinalityUnsupported);
}

TEST_CASE("parse_evidence") {
    const auto one = parse_evidence("1 3 1");
    CHECK(one.size() == 1);
    CHECK(one.get(3) == 1);
    CHECK(parse_evidence("0").empty());
    const auto two = parse_evidence("2 0 0 5 1");
    CHECK(two.get(0) == -1);
    CHECK(two.get(5) == 1);
    CHECK_THROWS_AS(parse_evidence("1 3 2"), SyntaxError);
    CHECK_THROWS_AS(parse_evidence("2 3 1"), CountMismatch);
}

TEST_CASE("write_uai round trip is bit exact") {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = test::random_model(rng, 2 + rng.below(10), 8, 4);
        const auto back = to_model(parse_uai(write_uai(m)));
        REQUIRE(back.factors().size() == m.factors().size());
        for (std::size_t i = 0; i < m.factors().size(); ++i) {
            CHECK(back.factors()[i].scope() == m.factors()[i].scope());
            for (std::size_t j = 0; j < m.factors()[i].size(); ++j)
                CHECK(back.factors()[i][j] == m.factors()[i][j]);
        }
        CHECK(brute_force_log10Z(back) == brute_force_log10Z(m));
    }
    Evidence e;
    e.set(0, 1);
    CHECK_THROWS_AS(write_uai(apply_evidence(gen_ising_grid(2, 1, 1, true, 1), e)), InvalidParams);
}
