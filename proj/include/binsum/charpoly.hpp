#pragma once

#include "binsum/check_report.hpp"
#include "binsum/coefficients.hpp"
#include "binsum/int_poly.hpp"
#include "binsum/numtheory.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace binsum {

/// Chebyshev T_n from the explicit sum
///   T_n(x) = (n/2) sum_{i<=n/2} (-1)^i (n-1-i)!/(i!(n-2i)!) (2x)^{n-2i}.
/// Each combined coefficient is an exact integer; the division by 2 is
/// checked rather than assumed.
inline IntPoly cheb_T(long n) {
    if (n < 0) throw std::domain_error("cheb_T: n must be nonnegative");
    if (n == 0) return IntPoly{1};
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long i = 0; 2 * i <= n; ++i) {
        BigInt num = BigInt(n) * factorial(n - 1 - i) *
                     pow_int(2, static_cast<unsigned long>(n - 2 * i));
        BigInt den = 2 * factorial(i) * factorial(n - 2 * i);
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (r != 0) throw std::logic_error("cheb_T: non-integer coefficient");
        c[static_cast<std::size_t>(n - 2 * i)] = parity_sign(i) * q;
    }
    return IntPoly(std::move(c));
}

/// Chebyshev U_n (degree n, second kind):
///   U_n(x) = sum_{i<=n/2} (-1)^i binom(n-i, i) (2x)^{n-2i}.
inline IntPoly cheb_U(long n) {
    if (n < 0) throw std::domain_error("cheb_U: n must be nonnegative");
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long i = 0; 2 * i <= n; ++i)
        c[static_cast<std::size_t>(n - 2 * i)] =
            parity_sign(i) * binom_int(n - i, i) * pow_int(2, static_cast<unsigned long>(n - 2 * i));
    return IntPoly(std::move(c));
}

/// C_n(x) = sum_{i<=(n-1)/2} (-1)^i binom(n-1-i, i) x^{(n-1)/2 - i}, the
/// monic factor with roots 4cos^2(k pi / n) over even 0 < k < n.
inline IntPoly c_poly(long n) {
    if (n < 1) throw std::domain_error("c_poly: n must be positive");
    long deg = (n - 1) / 2;
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1, BigInt(0));
    for (long i = 0; i <= deg; ++i)
        c[static_cast<std::size_t>(deg - i)] = parity_sign(i) * binom_int(n - 1 - i, i);
    return IntPoly(std::move(c));
}

/// D_n(x) = sum_{i<=n/2} (-1)^i (n/(n-i)) binom(n-i, i) x^{n/2 - i}.
inline IntPoly d_poly(long n) {
    if (n < 1) throw std::domain_error("d_poly: n must be positive");
    long deg = n / 2;
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1, BigInt(0));
    for (long i = 0; i <= deg; ++i)
        c[static_cast<std::size_t>(deg - i)] = parity_sign(i) * d_coeff(n, i);
    return IntPoly(std::move(c));
}

/// Characteristic polynomial of the order-floor(m/2) recurrence:
/// (x-4) C_m(x) for even m, D_m(x) for odd m. Monic of degree floor(m/2),
/// with coefficients (1, -a_m(1), +a_m(2), ...).
inline IntPoly f_char(long m) {
    if (m < 1) throw std::domain_error("f_char: m must be positive");
    if (m % 2 == 0) return IntPoly{-4, 1} * c_poly(m);
    return d_poly(m);
}

/// A_n = prod_{d|n} C_d^{mu(n/d)}, realized as one exact division of the
/// mu=+1 product by the mu=-1 product. NotDivisible here would mean the
/// factorization claim is broken, so it is allowed to propagate.
inline IntPoly a_poly(long n) {
    if (n < 1) throw std::domain_error("a_poly: n must be positive");
    IntPoly num{1}, den{1};
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        switch (moebius(n / d)) {
            case 1: num = num * c_poly(d); break;
            case -1: den = den * c_poly(d); break;
            default: break;
        }
    }
    return exact_div(num, den);
}

namespace detail {
inline void require_poly_equal(CheckReport& report, const std::string& inputs,
                               const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs == rhs) return;
    long top = std::max(lhs.degree(), rhs.degree());
    for (long i = 0; i <= top; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        if (lhs.coeff(k) != rhs.coeff(k)) {
            report.fail(inputs + " [coeff of x^" + std::to_string(i) + "]",
                        BigRat(lhs.coeff(k)), BigRat(rhs.coeff(k)));
            return;
        }
    }
}
} // namespace detail

/// The exact polynomial identities tying T_n/U_{n-1} to D_n/C_n:
///   n even: 2 T_n(x) = D_n(4x^2)   and U_{n-1}(x) = 2x C_n(4x^2)
///   n odd:  T_n(x) = x D_n(4x^2)   and U_{n-1}(x) = C_n(4x^2)
inline CheckReport cheb_relation_check(long n) {
    if (n < 1) throw std::domain_error("cheb_relation_check: n must be positive");
    const IntPoly four_x_sq{0, 0, 4};
    const IntPoly x{0, 1};
    IntPoly t = cheb_T(n), u = cheb_U(n - 1);
    IntPoly d4 = d_poly(n).compose(four_x_sq), c4 = c_poly(n).compose(four_x_sq);
    std::string at = "n=" + std::to_string(n);
    CheckReport report(at);
    if (n % 2 == 0) {
        detail::require_poly_equal(report, at + " [2T_n vs D_n(4x^2)]", BigInt(2) * t, d4);
        detail::require_poly_equal(report, at + " [U_{n-1} vs 2x C_n(4x^2)]", u, IntPoly{0, 2} * c4);
    } else {
        detail::require_poly_equal(report, at + " [T_n vs x D_n(4x^2)]", t, x * d4);
        detail::require_poly_equal(report, at + " [U_{n-1} vs C_n(4x^2)]", u, c4);
    }
    return report;
}

} // namespace binsum
