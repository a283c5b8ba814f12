#include "binsum/coefficients.hpp"
#include "binsum/sweeps.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binsum;

TEST_CASE("c and d coefficient values", "[coefficients]") {
    CHECK(c_coeff(1, 1) == 4);
    CHECK(c_coeff(6, 2) == 19);
    CHECK(c_coeff(5, 2) == 13);
    CHECK(d_coeff(7, 0) == 1);
    CHECK(d_coeff(6, 2) == 9);
    CHECK(d_coeff(5, 1) == 5);
    CHECK_THROWS_AS(c_coeff(6, 4), std::domain_error);
    CHECK_THROWS_AS(d_coeff(6, 4), std::domain_error);
    CHECK_THROWS_AS(c_coeff(0, 0), std::domain_error);
}

TEST_CASE("coefficient identities up to m = 40", "[coefficients]") {
    for (long m = 1; m <= 40; ++m) {
        for (long i = 0; i <= m / 2; ++i)
            REQUIRE(d_coeff(m, i) == 2 * binom_int(m - i, i) - binom_int(m - 1 - i, i));
        for (long i = 1; 2 * i < m; ++i)
            REQUIRE(c_coeff(m, i) == binom_int(m - 1 - i, i) + 4 * binom_int(m - i, i - 1));
        // exact-division witness behind the closed formula
        for (long i = 1; i <= (m + 1) / 2; ++i) {
            if (m == 1 && i == 1) continue;
            BigInt num = (BigInt(m) * m + m - 2 * i) * binom_int(m + 1 - i, i);
            REQUIRE(num % (BigInt(m - i) * (m + 1 - i)) == 0);
        }
        // endpoint cross-check from the proof
        if (m >= 2) {
            long e = (m + 1) / 2;
            REQUIRE(c_coeff(m, e) == 4 * binom_int(m - e, e - 1));
        }
        for (long i = 1; i <= m / 2; ++i) REQUIRE(d_coeff(m, i) > 0);
        for (long i = 1; i <= (m + 1) / 2; ++i) REQUIRE(c_coeff(m, i) > 0);
    }
}

TEST_CASE("a/b dispatch rows", "[coefficients]") {
    auto [a6, b6] = ab_coeffs(6);
    CHECK(a6.values == std::vector<BigInt>{8, 19, 12});
    CHECK(b6.values == std::vector<BigInt>{6, 9, 2});

    auto [a12, b12] = ab_coeffs(12);
    CHECK(b12.values == std::vector<BigInt>{12, 54, 112, 105, 36, 2});

    auto [a2, b2] = ab_coeffs(2);
    CHECK(a2.values == std::vector<BigInt>{4});
    CHECK(b2.values == std::vector<BigInt>{2});

    auto [a1, b1] = ab_coeffs(1);
    CHECK(a1.values.empty());
    CHECK(b1.values == std::vector<BigInt>{4}); // b_1(1) = c_1(1)
}

TEST_CASE("tables reproduce the reference rows", "[coefficients]") {
    std::vector<CoeffRow> t1 = coeff_table(1, 2, 12);
    CHECK(t1.size() == 11);
    CHECK(t1[8].m == 10);
    CHECK(t1[8].values == std::vector<BigInt>{12, 53, 104, 85, 20});

    std::vector<CoeffRow> t2 = coeff_table(2, 2, 12);
    CHECK(t2[9].m == 11);
    CHECK(t2[9].values == std::vector<BigInt>{13, 64, 147, 155, 61, 4});

    std::vector<CoeffRow> single = coeff_table(2, 2, 2);
    CHECK(single.size() == 1);
    CHECK(single[0].values == std::vector<BigInt>{2});

    CHECK_THROWS_AS(coeff_table(3, 2, 12), std::domain_error);
    CHECK_THROWS_AS(coeff_table(1, 1, 12), std::domain_error);

    CHECK(sweeps::tables().pass());
}

TEST_CASE("catalan congruence", "[coefficients]") {
    // p = 5: -d_4(1) = -4 = 1 = C_1, c_4(1) = 6 = 1; d_4(2) = 2 = C_2, -c_4(2) = -8 = 2
    CHECK(mod_p_reduce(BigRat(-d_coeff(4, 1)), 5) == 1);
    CHECK(mod_p_reduce(BigRat(c_coeff(4, 1)), 5) == 1);
    CHECK(d_coeff(4, 2) == 2);
    CHECK(mod_p_reduce(BigRat(-c_coeff(4, 2)), 5) == 2);
    CHECK(mod_p_reduce(BigRat(-d_coeff(2, 1)), 3) == 1);

    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L})
        REQUIRE(catalan_congruence_check(p).pass());
    CHECK_THROWS_AS(catalan_congruence_check(2), std::domain_error);
    CHECK_THROWS_AS(catalan_congruence_check(9), std::domain_error);
}
