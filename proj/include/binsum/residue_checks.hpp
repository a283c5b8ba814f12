#pragma once

#include "binsum/check_report.hpp"
#include "binsum/coefficients.hpp"
#include "binsum/residue_sums.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace binsum {

/// sum_{i=0}^{floor((m-1)/2)} (-1)^i binom(m-1-i, i) msum(n-2i, k-i, m)
///   = 2^{n-m+1} + [n = m-2] (-1)^k / 2
/// for n >= 2 floor((m-1)/2). The right side is a half-integer exactly when
/// n = m-2, so both sides are compared as exact rationals.
inline CheckReport thm11_check(long m, long k, long n) {
    if (m < 1) throw std::domain_error("thm11_check: m must be positive");
    long h = (m - 1) / 2;
    if (n < 2 * h) throw std::domain_error("thm11_check: n below 2*floor((m-1)/2)");
    BigRat lhs(0);
    for (long i = 0; i <= h; ++i)
        lhs += parity_sign(i) * BigRat(binom_int(m - 1 - i, i) * msum(n - 2 * i, k - i, m));
    BigRat rhs = pow2(n - m + 1);
    if (n == m - 2) rhs += BigRat(parity_sign(k), 2);
    CheckReport report("m=" + std::to_string(m) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
    report.require_equal(report.swept(), lhs, rhs);
    return report;
}

struct Cor11Result {
    std::vector<BigInt> u; // u_n = msum(n, floor((k+n)/2), m)
    std::vector<BigInt> v; // v_n = m u_n - 2^n - [n=0][m even] (-1)^{floor(k/2)}
    CheckReport report;
};

/// Builds the u/v sequences of the corollary and verifies the shifted
/// identity and the homogeneous recurrence for 2 floor((m-1)/2) <= n <= n_max.
inline Cor11Result cor11_sequences(long m, long k, long n_max) {
    if (m < 1) throw std::domain_error("cor11_sequences: m must be positive");
    if (n_max < 0) throw std::domain_error("cor11_sequences: n_max must be nonnegative");
    Cor11Result out{{}, {}, CheckReport("m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                        " n=0.." + std::to_string(n_max))};
    for (long n = 0; n <= n_max; ++n) {
        out.u.push_back(msum(n, floor_div(k + n, 2), m));
        BigInt v = m * out.u.back() - pow_int(2, static_cast<unsigned long>(n));
        if (n == 0 && m % 2 == 0) v -= parity_sign(floor_div(k, 2));
        out.v.push_back(v);
    }
    long h = (m - 1) / 2;
    for (long n = 2 * h; n <= n_max; ++n) {
        BigRat usum(0);
        BigInt vsum = 0;
        for (long i = 0; i <= h; ++i) {
            BigInt w = parity_sign(i) * binom_int(m - 1 - i, i);
            usum += BigRat(w * out.u[static_cast<std::size_t>(n - 2 * i)]);
            vsum += w * out.v[static_cast<std::size_t>(n - 2 * i)];
        }
        BigRat rhs = pow2(n - m + 1);
        if (n == m - 2) rhs -= BigRat(parity_sign(floor_div(k + m, 2)), 2);
        std::string at = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        out.report.require_equal(at + " [u identity]", usum, rhs);
        out.report.require_equal(at + " [v recurrence]", BigRat(vsum), BigRat(0));
    }
    return out;
}

enum class Thm12Variant { plain7, alternate8 };

/// plain7:      sum (-1)^i c_m(i) msum(n-2i, k-i, m)   = 2 (-1)^k [m = n]
///              over i = 0..floor((m+1)/2), n >= 2 floor((m+1)/2)
/// alternate8:  sum (-1)^i d_m(i) altsum(n-2i, k-i, m) = (-1)^k [m-1 = n]
///              over i = 0..floor(m/2),     n >= 2 floor(m/2)
inline CheckReport thm12_check(long m, long k, long n, Thm12Variant which) {
    if (m < 1) throw std::domain_error("thm12_check: m must be positive");
    bool plain = (which == Thm12Variant::plain7);
    long top = plain ? (m + 1) / 2 : m / 2;
    if (n < 2 * top) throw std::domain_error("thm12_check: n below the stated bound");
    BigInt lhs = 0;
    for (long i = 0; i <= top; ++i) {
        BigInt coeff = plain ? c_coeff(m, i) : d_coeff(m, i);
        BigInt s = plain ? msum(n - 2 * i, k - i, m) : altsum(n - 2 * i, k - i, m);
        lhs += parity_sign(i) * coeff * s;
    }
    BigInt rhs = 0;
    if (plain && m == n) rhs = 2 * parity_sign(k);
    if (!plain && m - 1 == n) rhs = parity_sign(k);
    CheckReport report("m=" + std::to_string(m) + " k=" + std::to_string(k) +
                       " n=" + std::to_string(n) + (plain ? " [plain]" : " [alternate]"));
    report.require_equal(report.swept(), BigRat(lhs), BigRat(rhs));
    return report;
}

/// For m > 2: the chain msum(n, j, m) over floor((n+1)/2) <= j <= floor((n+m)/2)
/// decreases strictly when n >= m-1, and otherwise decreases strictly down to
/// j = n with every later entry equal to zero. Also the sandwich
/// msum(n, floor(n/2), m) > 2^n/m > msum(n, floor((m+n)/2), m).
inline CheckReport monotonicity_profile(long m, long n) {
    if (m <= 2) throw std::domain_error("monotonicity_profile: m must exceed 2");
    if (n < 1) throw std::domain_error("monotonicity_profile: n must be positive");
    long lo = (n + 1) / 2, hi = (n + m) / 2;
    std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    CheckReport report(at + " chain j=" + std::to_string(lo) + ".." + std::to_string(hi));
    for (long j = lo; j < hi; ++j) {
        BigInt a = msum(n, j, m), b = msum(n, j + 1, m);
        std::string step = at + " j=" + std::to_string(j);
        if (n >= m - 1 || j <= n)
            report.require(a > b, step + " [strict]", BigRat(a), BigRat(b));
        else
            report.require(a == 0 && b == 0, step + " [zero tail]", BigRat(a), BigRat(b));
    }
    if (n < m - 1)
        report.require(msum(n, hi, m) == 0, at + " [tail end]", BigRat(msum(n, hi, m)), BigRat(0));
    BigRat mid = pow2(n) / BigRat(m);
    BigRat left(msum(n, n / 2, m)), right(msum(n, (m + n) / 2, m));
    report.require(left > mid, at + " [sandwich left]", left, mid);
    report.require(mid > right, at + " [sandwich right]", mid, right);
    return report;
}

/// Glaisher: msum(n+p-1, r, p-1) = msum(n, r, p-1) (mod p) for n >= 1;
/// Hermite: msum(n, 0, p-1) = 1 (mod p) for odd n.
inline CheckReport hermite_glaisher_check(long p, long n, long r) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("hermite_glaisher_check: p must be an odd prime");
    if (n < 0) throw std::domain_error("hermite_glaisher_check: n must be nonnegative");
    std::string at = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
    CheckReport report(at);
    BigRat big(msum(n + p - 1, r, p - 1)), small(msum(n, r, p - 1));
    report.require_equal(at + " [Glaisher]",
                         BigRat(mod_p_reduce(big, p)), BigRat(mod_p_reduce(small, p)));
    if (n % 2 == 1)
        report.require_equal(at + " [Hermite]",
                             BigRat(mod_p_reduce(BigRat(msum(n, 0, p - 1)), p)), BigRat(1));
    return report;
}

/// Fleck's alternating sum and its p-adic valuation against the bound
/// floor((n-1)/(p-1)). A zero sum has infinite valuation and passes
/// vacuously.
struct FleckReport {
    BigInt sum;
    Valuation valuation;
    long bound;
    bool pass;
};

inline FleckReport fleck(long p, long n, long r) {
    if (!is_prime(p)) throw std::domain_error("fleck: p must be prime");
    if (n < 1) throw std::domain_error("fleck: n must be positive");
    BigInt total = 0;
    long k0 = ((r % p) + p) % p;
    for (long k = k0; k <= n; k += p) {
        if (k % 2 == 0) total += binom_int(n, k);
        else total -= binom_int(n, k);
    }
    FleckReport out;
    out.sum = total;
    out.valuation = padic_val(total, BigInt(p));
    out.bound = (n - 1) / (p - 1);
    out.pass = out.valuation.at_least(out.bound);
    return out;
}

} // namespace binsum
