#pragma once

#include "binsum/rational.hpp"

#include <stdexcept>
#include <string>

namespace binsum {

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (BigInt d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_prime(long n) { return is_prime(BigInt(n)); }

/// Jacobi symbol (a/n); n must be odd and positive.
inline int jacobi(const BigInt& a, const BigInt& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error("jacobi: lower argument must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

inline int jacobi(long a, long n) { return jacobi(BigInt(a), BigInt(n)); }

/// p-adic valuation of an integer: a nonnegative order, or +infinity for 0
/// (so divisibility bounds hold vacuously on a zero value).
struct Valuation {
    bool infinite;
    long order; // meaningful only when !infinite

    static Valuation infinity() { return {true, 0}; }
    static Valuation of(long v) { return {false, v}; }

    bool at_least(long bound) const { return infinite || order >= bound; }
    std::string str() const { return infinite ? "inf" : std::to_string(order); }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.order == b.order);
    }
};

inline Valuation padic_val(const BigInt& x, const BigInt& p) {
    if (!is_prime(p)) throw std::domain_error("padic_val: p must be prime");
    if (x == 0) return Valuation::infinity();
    BigInt y = abs(x);
    long e = 0;
    while (y % p == 0) { y /= p; ++e; }
    return Valuation::of(e);
}

inline Valuation padic_val(long x, long p) { return padic_val(BigInt(x), BigInt(p)); }

/// Thrown when a rational cannot be reduced mod p because p divides its
/// denominator; congruence checks report this instead of crashing.
struct NotPIntegral : std::domain_error {
    NotPIntegral(const BigRat& q, const BigInt& p)
        : std::domain_error("not p-integral: " + q.str() + " mod " + p.get_str()) {}
};

/// num * den^{-1} mod p, in [0, p); p must be an odd prime.
inline BigInt mod_p_reduce(const BigRat& q, const BigInt& p) {
    if (p < 3 || !is_prime(p) || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("mod_p_reduce: p must be an odd prime");
    if (q.denominator() % p == 0) throw NotPIntegral(q, p);
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), q.denominator().get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotPIntegral(q, p); // unreachable given the divisibility test
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), BigInt(q.numerator() * inv).get_mpz_t(), p.get_mpz_t());
    return r;
}

inline BigInt mod_p_reduce(const BigRat& q, long p) { return mod_p_reduce(q, BigInt(p)); }

/// Binomial coefficient over the triangle; 0 whenever (n, k) falls outside
/// 0 <= k <= n.
inline BigInt binom_int(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Generalized binomial coefficient at a rational upper argument:
/// x(x-1)...(x-n+1)/n!, exactly; 1 when n = 0.
inline BigRat binom_general(const BigRat& x, long n) {
    if (n < 0) throw std::domain_error("binom_general: n must be nonnegative");
    if (n == 0) return BigRat(1);
    BigRat num(1);
    for (long j = 0; j < n; ++j) num *= x - BigRat(j);
    return num / BigRat(factorial(n));
}

/// i-th Catalan number binom(2i, i)/(i + 1).
inline BigInt catalan(long i) {
    if (i < 0) throw std::domain_error("catalan: index must be nonnegative");
    BigInt num = binom_int(2 * i, i);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), BigInt(i + 1).get_mpz_t());
    if (r != 0) throw std::logic_error("catalan: non-exact division");
    return q;
}

/// The three second-order recurrences with seeds 0, 1:
///   fibonacci: x_{k+2} = x_{k+1} + x_k
///   pell:      x_{k+2} = 2 x_{k+1} + x_k
///   s:         x_{k+2} = 4 x_{k+1} - x_k
enum class SecondOrderKind { fibonacci, pell, s };

inline BigInt second_order(SecondOrderKind kind, long k) {
    if (k < 0) throw std::domain_error("second_order: index must be nonnegative");
    long mul = kind == SecondOrderKind::fibonacci ? 1 : kind == SecondOrderKind::pell ? 2 : 4;
    long add = kind == SecondOrderKind::s ? -1 : 1;
    BigInt a = 0, b = 1;
    for (long step = 0; step < k; ++step) {
        BigInt next = mul * b + add * a;
        a = b;
        b = next;
    }
    return a;
}

/// Moebius function by trial factorization.
inline int moebius(long n) {
    if (n < 1) throw std::domain_error("moebius: n must be positive");
    int r = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

} // namespace binsum
