#include "binsum/numtheory.hpp"
#include "binsum/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace binsum;

TEST_CASE("BigRat canonical form", "[arith]") {
    BigRat q(4, 6);
    CHECK(q.numerator() == 2);
    CHECK(q.denominator() == 3);
    CHECK(q.str() == "2/3");

    BigRat neg(3, -9);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 3);
    CHECK(neg.str() == "-1/3");

    CHECK(BigRat(0, 7) == BigRat(0));
    CHECK(BigRat(0).denominator() == 1);
    CHECK_THROWS_AS(BigRat(1, 0), std::domain_error);

    // denominator positive and gcd 1 through arithmetic, on a pseudo-random grid
    for (long a = -20; a <= 20; ++a)
        for (long b = 1; b <= 12; ++b) {
            BigRat x(a, b);
            BigRat y = x * BigRat(6, 4) - BigRat(a, 7);
            CHECK(y.denominator() > 0);
            CHECK(gcd(abs(y.numerator()), y.denominator()) == 1);
        }
}

TEST_CASE("BigRat floor and fractional part", "[arith]") {
    CHECK(BigRat(7, 2).floor() == 3);
    CHECK(BigRat(7, 2).frac() == BigRat(1, 2));
    CHECK(BigRat(-5, 3).floor() == -2);
    CHECK(BigRat(-5, 3).frac() == BigRat(1, 3));
    CHECK(BigRat(4).floor() == 4);
    CHECK(BigRat(4).frac() == BigRat(0));

    for (long num = -30; num <= 30; ++num)
        for (long den = 1; den <= 9; ++den) {
            BigRat x(num, den);
            CHECK(BigRat(x.floor()) + x.frac() == x);
            CHECK(x.frac() >= BigRat(0));
            CHECK(x.frac() < BigRat(1));
        }
}

TEST_CASE("BigRat string forms", "[arith]") {
    CHECK(BigRat(3, 5).str() == "3/5");
    CHECK(BigRat(-1, 48).str() == "-1/48");
    CHECK(BigRat(BigInt("123456789012345678901234567890")).str() == "123456789012345678901234567890");
    CHECK(BigRat(-7).str() == "-7");
}

TEST_CASE("mod_p_reduce", "[arith]") {
    CHECK(mod_p_reduce(BigRat(-3, 16), 3) == 0);
    CHECK(mod_p_reduce(BigRat(0), 7) == 0);
    CHECK_THROWS_AS(mod_p_reduce(BigRat(1, 3), 3), NotPIntegral);
    CHECK_THROWS_AS(mod_p_reduce(BigRat(1, 2), 4), std::domain_error); // not prime
    CHECK_THROWS_AS(mod_p_reduce(BigRat(1, 3), 2), std::domain_error); // even
    CHECK(mod_p_reduce(BigRat(9, 4), 3) == 0);
    CHECK(mod_p_reduce(BigRat(1, 10), 3) == 1);
    CHECK(mod_p_reduce(BigRat(-23, 108), 5) == 4);
}

TEST_CASE("padic_val", "[arith]") {
    CHECK(padic_val(-9, 3) == Valuation::of(2));
    CHECK(padic_val(0, 5) == Valuation::infinity());
    CHECK(padic_val(10, 3) == Valuation::of(0));
    CHECK(padic_val(0, 5).at_least(1000000));
    CHECK_THROWS_AS(padic_val(12, 6), std::domain_error);
    CHECK(padic_val(BigInt(3) * 3 * 3 * 7, BigInt(3)).order == 3);
}

TEST_CASE("jacobi symbol", "[arith]") {
    CHECK(jacobi(1, 5) == 1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(3, 5) == -1);
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(15, 9) == 0);
    CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
    CHECK_THROWS_AS(jacobi(3, -5), std::domain_error);

    // complete multiplicativity in the top argument
    for (long n = 1; n <= 99; n += 2)
        for (long a = 1; a <= 25; ++a)
            for (long b = 1; b <= 25; ++b)
                CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
}

TEST_CASE("binom_int", "[arith]") {
    CHECK(binom_int(4, 2) == 6);
    CHECK(binom_int(4, 5) == 0);
    CHECK(binom_int(6, 3) == 20);
    CHECK(binom_int(-1, 0) == 0);
    CHECK(binom_int(5, -1) == 0);

    // Pascal rule across the triangle
    for (long n = 0; n < 60; ++n)
        for (long k = 0; k <= n + 1; ++k)
            CHECK(binom_int(n + 1, k) == binom_int(n, k) + binom_int(n, k - 1));
}

TEST_CASE("binom_general", "[arith]") {
    CHECK(binom_general(BigRat(17, 3), 0) == BigRat(1));
    CHECK(binom_general(BigRat(5), 2) == BigRat(10));
    CHECK(binom_general(BigRat(-1), 3) == BigRat(-1));
    CHECK(binom_general(BigRat(1, 2), 2) == BigRat(-1, 8));

    // agreement with binom_int at integer arguments
    for (long x = 0; x <= 60; ++x)
        for (long k = 0; k <= x; ++k)
            CHECK(binom_general(BigRat(x), k) == BigRat(binom_int(x, k)));
}

TEST_CASE("catalan numbers", "[arith]") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    for (long i = 0; i <= 30; ++i)
        CHECK(catalan(i) == binom_int(2 * i, i) - binom_int(2 * i, i + 1));
}

TEST_CASE("second-order sequences", "[arith]") {
    CHECK(second_order(SecondOrderKind::fibonacci, 4) == 3);
    CHECK(second_order(SecondOrderKind::pell, 4) == 12);
    CHECK(second_order(SecondOrderKind::s, 3) == 15);
    CHECK(second_order(SecondOrderKind::fibonacci, 10) == 55);
    CHECK(second_order(SecondOrderKind::pell, 7) == 169);
    CHECK(second_order(SecondOrderKind::s, 6) == 780);
    CHECK(second_order(SecondOrderKind::s, 0) == 0);
    CHECK(second_order(SecondOrderKind::s, 1) == 1);
}

TEST_CASE("is_prime and moebius", "[arith]") {
    CHECK(is_prime(2L));
    CHECK(is_prime(31L));
    CHECK_FALSE(is_prime(1L));
    CHECK_FALSE(is_prime(91L));
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);
    // sum over divisors of moebius is [n = 1]
    for (long n = 1; n <= 200; ++n) {
        long s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s += moebius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}
