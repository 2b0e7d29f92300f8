#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <walkbij/census.hpp>
#include <walkbij/series.hpp>

using namespace walkbij;

TEST_CASE("r_coeffs matches the central trinomial column") {
    std::vector<BigInt> r = r_coeffs(1, 7);
    CHECK(r == std::vector<BigInt>{1, 1, 3, 7, 19, 51, 141, 393});

    r = r_coeffs(0, 4);
    CHECK(r == std::vector<BigInt>{1, 0, 2, 0, 6});

    CHECK(r_coeffs(2, 2)[2] == 6);
}

TEST_CASE("r_coeffs counts recurrent walks") {
    for (int t : {0, 1, 2}) {
        Alphabet a{t};
        const int max_len = 10;
        std::vector<BigInt> r = r_coeffs(t, max_len);
        for (int len = 0; len <= max_len; ++len) {
            long long recurrent = 0;
            for_each_walk(len, a, [&](const Walk1D& w) {
                if (w.is_recurrent()) ++recurrent;
            });
            REQUIRE(r[static_cast<std::size_t>(len)] == BigInt(recurrent));
        }
    }
}

TEST_CASE("truncated multiplication") {
    TruncatedSeries a = TruncatedSeries::from_coeffs({1, 1}, 4);   // 1 + X
    TruncatedSeries b = TruncatedSeries::from_coeffs({1, -1}, 4);  // 1 - X
    TruncatedSeries p = a * b;
    CHECK(p.coeffs() == std::vector<BigInt>{1, 0, -1, 0, 0});
    CHECK(series_mul(a, b) == p);
}

TEST_CASE("reciprocal") {
    TruncatedSeries geo = TruncatedSeries::from_coeffs({1, -4}, 3).reciprocal();
    CHECK(geo.coeffs() == std::vector<BigInt>{1, 4, 16, 64});

    TruncatedSeries rec = TruncatedSeries::from_coeffs({1, -2, -3}, 3).reciprocal();
    CHECK(rec.coeffs() == std::vector<BigInt>{1, 2, 7, 20});

    CHECK_THROWS_AS(TruncatedSeries::from_coeffs({2, 1}, 3).reciprocal(), domain_error);
    try {
        TruncatedSeries::from_coeffs({0, 1}, 3).reciprocal();
    } catch (const domain_error& e) {
        CHECK(e.code() == errc::non_unit_constant_term);
    }
}

TEST_CASE("p times reciprocal(p) is 1, for random unit polynomials") {
    std::mt19937 rng(20240613);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::bernoulli_distribution sign;
    const int cap = 32;
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries p(cap);
        p.set_coeff(0, sign(rng) ? 1 : -1);
        for (int i = 1; i <= cap; ++i) p.set_coeff(i, coeff(rng));
        REQUIRE(p * p.reciprocal() == TruncatedSeries::one(cap));
    }
}

TEST_CASE("convolution of central binomial coefficients") {
    CHECK(eq1_holds(0)); // 1 = 1
    CHECK(eq1_holds(1)); // 2 + 2 = 4
    CHECK(eq1_holds(2)); // 6 + 4 + 6 = 16
    CHECK(check_eq1(30).all_ok());
}

TEST_CASE("convolution of R coefficients against the closed form") {
    CHECK(r_convolution(r_coeffs(1, 2), 2) == 7); // (27+1)/4
    CHECK(eq2_holds(1, 2));
    CHECK(eq2_holds(0, 3)); // both sides vanish
    CHECK(r_convolution(r_coeffs(0, 2), 2) == 4);
    CHECK(eq2_holds(0, 2));
    for (int t : {0, 1, 2, 3, 5}) CHECK(check_eq2(t, 20).all_ok());
}

TEST_CASE("squared R series equals the rational function") {
    CHECK(check_eq3(1, 6).all_ok());

    TruncatedSeries denom0 = TruncatedSeries::from_coeffs({1, 0, -4}, 4);
    CHECK(denom0.reciprocal().coeffs() == std::vector<BigInt>{1, 0, 4, 0, 16});
    CHECK(check_eq3(0, 4).all_ok());

    TruncatedSeries denom2 = TruncatedSeries::from_coeffs({1, -4, 0}, 4);
    CHECK(denom2.reciprocal().coeffs() == std::vector<BigInt>{1, 4, 16, 64, 256});
    CHECK(check_eq3(2, 4).all_ok());

    for (int t : {0, 1, 2, 3, 5}) CHECK(check_eq3(t, 24).all_ok());
    for (int t : {0, 1, 2, 3, 5})
        for (int n = 0; n <= 10; ++n) CHECK(eq3_holds(t, n));
}

TEST_CASE("two neutral kinds double the length") {
    CHECK(t2_coincidence_holds(0));
    CHECK(t2_coincidence_holds(2)); // R_{2,2} = 6 = C(4,2)
    CHECK(r_coeffs(2, 5)[5] == 252);
    CHECK(t2_coincidence_holds(5));
    CHECK(check_t2_coincidence(20).all_ok());
}
