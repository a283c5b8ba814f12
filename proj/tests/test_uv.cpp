#include "binsum/uv_sequences.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binsum;

TEST_CASE("u_seq values", "[uv]") {
    UVSeq u52 = u_seq({5, 2, 1}, 2);
    CHECK(u52.at(0) == BigRat(3, 5));
    CHECK(u52.at(2) == BigRat(2));
    CHECK(u_value({5, 1, 1}, 2) == BigRat(3)); // binom(3, 2)
    CHECK(u_value({5, 2, 1}, 1) == BigRat(1)); // 5 U_1 - 5 U_0 = U_2 = 2
    CHECK_THROWS_AS(u_seq({6, 2, 3}, 4), std::domain_error); // gcd(q, m) != 1
}

TEST_CASE("v_seq values and the two routes", "[uv]") {
    UVSeq v41 = v_seq({4, 1, 1}, 1);
    CHECK(v41.at(0) == BigRat(1, 2));
    CHECK(v41.at(1) == BigRat(1));
    CHECK(v_value({4, 1, 3}, 3) == BigRat(10));
    CHECK(BigRat(2) * u_value({8, 1, 3}, 3) - u_value({4, 1, 3}, 3) == BigRat(10));
    CHECK(v_value({4, 1, 3}, 2) == BigRat(3));
    CHECK_THROWS_AS(v_seq({4, 1, 2}, 3), std::domain_error); // gcd(q, 2m) != 1

    // route agreement across a grid (v_value throws internally on mismatch)
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= m; ++n)
            for (long q = 1; q <= 2 * m; ++q) {
                if (std::gcd(q, 2 * m) != 1) continue;
                for (long l = 0; l <= m + 4; ++l) REQUIRE_NOTHROW(v_value({m, n, q}, l));
            }
}

TEST_CASE("q-sign symmetry of U", "[uv]") {
    for (long m = 1; m <= 8; ++m)
        for (long n = 1; n <= m; ++n)
            for (long q = 1; q <= 2 * m; ++q) {
                if (std::gcd(q, m) != 1) continue;
                for (long l = 0; l <= m + 4; ++l)
                    REQUIRE(u_value({m, n, q}, l) == u_value({m, n, -q}, l));
            }
}

TEST_CASE("huge q reduces safely", "[uv]") {
    long q = 4000000000000000001L; // = 1 (mod 10)
    CHECK(u_value({5, 2, q}, 2) == u_value({5, 2, 1}, 2));
    CHECK(v_value({5, 2, q}, 2) == v_value({5, 2, 1}, 2));
    CHECK(u_value({5, 2, -q}, 2) == u_value({5, 2, 1}, 2));
}

TEST_CASE("integrality for l >= 1 and the integer accessor", "[uv]") {
    UVSeq u52 = u_seq({5, 2, 1}, 6);
    CHECK(u52.integer_at(2) == 2);
    CHECK_THROWS_AS(u52.integer_at(0), std::logic_error); // U_0 = 3/5

    for (long m = 1; m <= 8; ++m) {
        long l_max = m + 6;
        for (long n = 1; n <= m; ++n)
            for (long q = 1; q <= 2 * m; ++q) {
                if (std::gcd(q, m) == 1) {
                    UVSeq us = u_seq({m, n, q}, l_max);
                    for (long l = 1; l <= l_max; ++l) REQUIRE(us.at(l).is_integer());
                }
                if (std::gcd(q, 2 * m) == 1) {
                    UVSeq vs = v_seq({m, n, q}, l_max);
                    for (long l = 1; l <= l_max; ++l) REQUIRE(vs.at(l).is_integer());
                    REQUIRE(vs.at(0) == BigRat(n, 2));
                }
            }
    }
}

TEST_CASE("recurrences against the coefficient rows", "[uv]") {
    // m=5: a_5 = (5, 5), so U_2 = 5 U_1 - 5 U_0 = 5 - 3 = 2
    CHECK(uv_recurrence_check({5, 2, 1}, 12, UVKind::U).pass());
    CHECK(BigRat(5) * u_value({5, 2, 1}, 1) - BigRat(5) * u_value({5, 2, 1}, 0) == BigRat(2));

    // m=4: b_4 = (4, 2), so V_2 = 4 V_1 - 2 V_0 = 4 - 1 = 3
    CHECK(uv_recurrence_check({4, 1, 3}, 12, UVKind::V).pass());
    CHECK(BigRat(4) * v_value({4, 1, 3}, 1) - BigRat(2) * v_value({4, 1, 3}, 0) == BigRat(3));

    // m=1: empty coefficient row, all U_l = 0
    CHECK(uv_recurrence_check({1, 1, 1}, 5, UVKind::U).pass());
    for (long l = 0; l <= 5; ++l) CHECK(u_value({1, 1, 1}, l) == BigRat(0));

    // m=1 V side: b_1 = (4), V_l = 4 V_{l-1}
    CHECK(uv_recurrence_check({1, 1, 1}, 6, UVKind::V).pass());
    CHECK(v_value({1, 1, 1}, 1) == BigRat(4) * v_value({1, 1, 1}, 0));

    CHECK_THROWS_AS(uv_recurrence_check({5, 2, 1}, 1, UVKind::U), std::domain_error);

    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= m; ++n)
            for (long q = 1; q <= 2 * m; ++q) {
                if (std::gcd(q, m) == 1)
                    REQUIRE(uv_recurrence_check({m, n, q}, 2 * m + 6, UVKind::U).pass());
                if (std::gcd(q, 2 * m) == 1)
                    REQUIRE(uv_recurrence_check({m, n, q}, 2 * m + 6, UVKind::V).pass());
            }
}

TEST_CASE("closed forms", "[uv]") {
    CHECK(u_value({6, 3, 1}, 0) == BigRat(3, 4));
    CHECK(u_value({6, 1, 1}, 3) == BigRat(10)); // binom(5, 3)
    CHECK(v_value({3, 2, 1}, 0) == BigRat(1));
    for (long m = 1; m <= 10; ++m)
        for (long q = 1; q <= 2 * m; ++q)
            if (std::gcd(q, m) == 1)
                REQUIRE(closed_form_check(m, q, 2 * m + 10).pass());
    CHECK_THROWS_AS(closed_form_check(6, 2, 5), std::domain_error);
}
