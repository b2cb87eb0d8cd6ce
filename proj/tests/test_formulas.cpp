#include <catch2/catch_amalgamated.hpp>

#include "ytc/formulas.hpp"
#include "ytc/json_io.hpp"

using namespace ytc;

TEST_CASE("chi regimes and values") {
    ChiRegime r = chi(19, 3, 4);
    CHECK(r.kind == ChiRegimeKind::ResidueT);
    CHECK(r.value == 5);

    r = chi(12, 3, 4);
    CHECK(r.kind == ChiRegimeKind::Linear);
    CHECK(r.value == 1);

    CHECK(chi_value(6, 2, 2) == 3);
    CHECK(chi(5, 3, 2).kind == ChiRegimeKind::Zero);
    CHECK(chi_value(-4, 2, 3) == 0);

    r = chi(20, 3, 4);
    CHECK(r.kind == ChiRegimeKind::ResidueD);
    CHECK(r.residue == 0);
    CHECK(r.value == 6);

    CHECK_THROWS_AS(chi(5, 0, 2), DomainError);
}

TEST_CASE("chi regimes partition the parameter space") {
    for (int t = 1; t <= 4; ++t)
        for (int k = 1; k <= 5; ++k)
            for (int n = -5; n <= 40; ++n) {
                ChiRegime r = chi(n, k, t);
                if (n < k * t) {
                    CHECK(r.kind == ChiRegimeKind::Zero);
                } else if (n <= k * (t + 1)) {
                    CHECK(r.kind == ChiRegimeKind::Linear);
                } else if (n % (t + 1) == t) {
                    CHECK(r.kind == ChiRegimeKind::ResidueT);
                } else {
                    CHECK(r.kind == ChiRegimeKind::ResidueD);
                }
            }
}

TEST_CASE("pd formula") {
    CHECK(pd_formula(20, 3, 4) == 6);
    CHECK(pd_formula(27, 4, 3) == 10);
    CHECK(pd_formula(5, 2, 1) == 4);
    CHECK_THROWS_AS(pd_formula(5, 3, 2), DomainError);
    // t = 1 agrees with the chi piecewise form
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n; ++k) CHECK(pd_formula(n, k, 1) == chi_value(n, k, 1));
}

TEST_CASE("krull formula") {
    CHECK(krull_formula(9, 2, 2) == 6);
    CHECK(krull_formula(29, 3, 5) == 26);
    for (int t = 1; t <= 6; ++t) CHECK(krull_formula(t, 1, t) == t - 1);
    CHECK_THROWS_AS(krull_formula(4, 3, 2), DomainError);
}

TEST_CASE("helly formula") {
    HellyResult h = helly_formula(Partition({5, 4, 2}), 3);
    CHECK_FALSE(h.simplex);
    CHECK(h.value == 5);

    CHECK(helly_formula(Partition({7}), 2).simplex);
    CHECK(helly_formula(Partition({3, 3, 3, 3}), 2).value == 5);
}

TEST_CASE("leray formula") {
    CHECK(leray_formula(9, 3, 2) == 3);
    CHECK(leray_formula(12, 3, 4) == 0);
    CHECK(leray_formula(19, 3, 4) == 4);
    CHECK_THROWS_AS(leray_formula(5, 3, 2), DomainError);
}

TEST_CASE("vertex-decomposability characterization") {
    CHECK(vd_characterization(Partition({5, 4, 2}), 1));
    CHECK_FALSE(vd_characterization(Partition({5, 4, 2}), 3));
    CHECK(vd_characterization(Partition({5, 3, 2}), 3));
    CHECK(vd_characterization(Partition({9}), 2));
}

TEST_CASE("linearity characterization") {
    LinearityFlags f = linearity_characterization(9, 3, 2);
    CHECK_FALSE(f.linear_quotients);
    CHECK_FALSE(f.linear_resolution);

    f = linearity_characterization(8, 3, 2);
    CHECK(f.linear_quotients);
    CHECK(f.linear_resolution);

    f = linearity_characterization(6, 3, 2);
    CHECK(f.linear_quotients);

    CHECK(linearity_characterization(10, 3, 1).linear_quotients);
    CHECK_THROWS_AS(linearity_characterization(5, 3, 2), DomainError);
}

TEST_CASE("chi lemma sweeps pass") {
    ChiLemmaBounds bounds{40, 4, 3};
    for (const LemmaReport& r : chi_lemma_checks(bounds)) {
        INFO(r.lemma);
        CHECK(r.pass);
        CHECK(r.cases > 0);
        CHECK_FALSE(r.counterexample.has_value());
    }
}

TEST_CASE("lemma reports serialize with the documented shape") {
    ChiLemmaBounds bounds{20, 3, 2};
    auto reports = chi_lemma_checks(bounds);
    REQUIRE_FALSE(reports.empty());
    json j = lemma_report_to_json(reports.front());
    CHECK(j.contains("lemma"));
    CHECK(j["range"]["max_n"] == 20);
    CHECK(j["pass"] == true);
    CHECK(j["counterexample"].is_null());
}

TEST_CASE("chi monotone boundary jumps zero to one") {
    for (int t = 1; t <= 4; ++t)
        for (int k = 1; k <= 4; ++k) {
            CHECK(chi_value(k * t - 1, k, t) == 0);
            CHECK(chi_value(k * t, k, t) == 1);
        }
}

TEST_CASE("shift lemma at i = k reduces to a one-block comparison") {
    for (int t = 1; t <= 4; ++t)
        for (int k = 1; k <= 5; ++k)
            for (int n = 0; n <= 30; ++n)
                CHECK(chi_value(n - k * t, 1, t) <= chi_value(n, k + 1, t));
}
