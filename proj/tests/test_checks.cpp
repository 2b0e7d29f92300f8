#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <memory>
#include <string>

#include <walkbij/checks.hpp>

using namespace walkbij;

TEST_CASE("theorem1 check: domain sizes and verdicts") {
    VerificationReport rep = check_theorem1(8, Alphabet{0});
    CHECK(rep.domain_size == 70);
    CHECK(rep.codomain_size == 70);
    CHECK(rep.all_ok());

    rep = check_theorem1(7, Alphabet{0});
    CHECK(rep.domain_size == 35);
    CHECK(rep.codomain_size == 35);
    CHECK(rep.all_ok());

    for (int len = 0; len <= 10; ++len) REQUIRE(check_theorem1(len, Alphabet{0}).all_ok());
    for (int len = 0; len <= 7; ++len) REQUIRE(check_theorem1(len, Alphabet{1}).all_ok());
}

TEST_CASE("ballot bijection checks at moderate sizes") {
    for (const auto& [name, _] : ugly_to_bad_registry()) {
        for (int mu = 0; mu <= 10; ++mu) {
            VerificationReport rep = check_ballot_map(name, mu);
            INFO(rep.name << ": " << rep.summary());
            REQUIRE(rep.all_ok());
        }
    }
}

TEST_CASE("lift checks at moderate sizes") {
    for (const auto& [name, _] : ugly_to_bad_registry()) {
        for (int mu = 1; mu <= 9; ++mu) {
            VerificationReport rep = check_lift(name, mu);
            INFO(rep.name << ": " << rep.summary());
            REQUIRE(rep.all_ok());
        }
    }
}

TEST_CASE("footnote check, including the trivial even lengths") {
    for (int mu = 0; mu <= 7; ++mu) {
        VerificationReport rep = check_footnote(mu);
        INFO(rep.name << ": " << rep.summary());
        REQUIRE(rep.all_ok());
    }
    CHECK(check_footnote(5).domain_size == 16); // 2^5 / 2
}

TEST_CASE("concat pairing is a bijection for l <= 11") {
    for (int t : {0, 1}) {
        for (int l = 0; l <= 11; ++l) {
            VerificationReport rep = check_concat(l, Alphabet{t});
            INFO(rep.name << ": " << rep.summary());
            REQUIRE(rep.all_ok());
        }
    }
}

TEST_CASE("corollary check") {
    for (int n = 0; n <= 10; ++n) REQUIRE(check_corollary(n).all_ok());
}

TEST_CASE("statistic histogram equalities") {
    for (int n = 0; n <= 9; ++n) REQUIRE(check_stats_equalities(n).all_ok());
    CHECK_THROWS_AS(check_stats_equalities(kStatsEqualityCap + 1), domain_error);
}

TEST_CASE("ballot-count check") {
    for (int mu = 0; mu <= 10; ++mu) REQUIRE(check_ballot_counts(mu).all_ok());
}

TEST_CASE("the convolution identity counts odd-ended walks") {
    for (int t : {0, 1})
        for (int l = 0; l <= 8; ++l) REQUIRE(eq2_census_agrees(t, l));
}

TEST_CASE("named check dispatch") {
    CheckContext ctx;
    CHECK_NOTHROW(make_check("theorem1", ctx));
    CHECK_NOTHROW(make_check("lift:andre", ctx));
    CHECK_NOTHROW(make_check("reflect-second", ctx));
    CHECK_THROWS_AS(make_check("bogus", ctx), domain_error);
    CHECK_THROWS_AS(make_check("lift:bogus", ctx), domain_error);

    CHECK(check_length_limit("theorem1", ctx) == 20);
    ctx.alphabet = Alphabet{1};
    CHECK(check_length_limit("theorem1", ctx) == 13);
    CHECK(check_length_limit("theorem2", ctx) == 8);
    CHECK(check_length_limit("stats-equalities", ctx) == kStatsEqualityCap);

    VerificationReport rep = make_check("andre", ctx)(6);
    CHECK(rep.all_ok());
}

TEST_CASE("check names cover the registry") {
    auto names = check_names();
    CHECK(std::find(names.begin(), names.end(), "lift:reflect-last") != names.end());
    CHECK(std::find(names.begin(), names.end(), "theorem2") != names.end());
}
