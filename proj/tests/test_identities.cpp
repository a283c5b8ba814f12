#include "binsum/identities.hpp"
#include "binsum/numtheory.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binsum;

TEST_CASE("lemma_2_1_check examples", "[identities]") {
    CHECK(lemma_2_1_check(0, BigRat(9, 7), BigRat(-3)).pass());
    CHECK(lemma_2_1_check(1, BigRat(3), BigRat(7)).pass());
    CHECK(lemma_2_1_check(4, BigRat(-2), BigRat(5, 2)).pass());

    // l = 0 collapses both sides to 1 (empty products)
    CHECK(binom_general(BigRat(9, 7) + BigRat(-3), 0) * binom_general(BigRat(-3), 0) == BigRat(1));
    CHECK(binom_general(BigRat(0) - BigRat(9, 7), 0) == BigRat(1));

    // frozen value of either side at (l=4, x=-2, y=5/2)
    BigRat lhs(0);
    for (long j = 0; j <= 4; ++j)
        lhs += parity_sign(4 - j) * binom_general(BigRat(-2) + BigRat(5, 2) + BigRat(j), 4 - j) *
               binom_general(BigRat(5, 2) + BigRat(2 * j), j);
    CHECK(lhs == BigRat(57));
}

TEST_CASE("lemma_2_1_check integer grid", "[identities]") {
    for (long l = 0; l <= 8; ++l)
        for (long x = -10; x <= 10; ++x)
            for (long y = -10; y <= 10; ++y)
                REQUIRE(lemma_2_1_check(l, BigRat(x), BigRat(y)).pass());
}

TEST_CASE("curious identity examples", "[identities]") {
    CHECK(curious_identity_check(0, BigRat(7), BigRat(9)).pass());
    CHECK(curious_identity_check(1, BigRat(3), BigRat(5)).pass());
    CHECK(curious_identity_check(5, BigRat(-3, 2), BigRat(2)).pass());
}

TEST_CASE("curious identity grid and y-independence", "[identities]") {
    for (long m = 0; m <= 12; ++m)
        for (long x = -10; x <= 10; ++x) {
            // the right side does not involve y, so the left side must be
            // constant in y; pin it against y = 0
            BigRat at_zero(0);
            bool have_zero = false;
            for (long y = -10; y <= 10; ++y) {
                CheckReport r = curious_identity_check(m, BigRat(x), BigRat(y));
                REQUIRE(r.pass());
                BigRat lhs = (BigRat(x) + BigRat(m + 1)) * [&] {
                    BigRat s(0);
                    for (long i = 0; i <= m; ++i)
                        s += parity_sign(i) * binom_general(BigRat(x + y + i), m - i) *
                             binom_general(BigRat(y + 2 * i), i);
                    return s;
                }();
                if (!have_zero) { at_zero = lhs; have_zero = true; }
                REQUIRE(lhs == at_zero);
            }
        }
}

TEST_CASE("gould identity", "[identities]") {
    CHECK(gould_check(1).pass());
    CHECK(gould_check(3).pass());
    CHECK(gould_check(6).pass());
    for (long m = 1; m <= 40; ++m) REQUIRE(gould_check(m).pass());
    CHECK_THROWS_AS(gould_check(0), std::domain_error);
}
