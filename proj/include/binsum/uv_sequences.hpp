#pragma once

#include "binsum/check_report.hpp"
#include "binsum/coefficients.hpp"
#include "binsum/residue_sums.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace binsum {

/// Parameters (m, n, q) of the sequences U_l^(q)(m,n) and V_l^(q)(m,n).
/// U needs gcd(q, m) = 1; V needs gcd(q, 2m) = 1.
struct UVParams {
    long m;
    long n;
    long q;

    std::string str() const {
        return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " q=" + std::to_string(q);
    }
};

namespace detail {
inline long gcd_abs(long a, long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}
inline void check_u_params(const UVParams& p) {
    if (p.m < 1 || p.n < 1) throw std::domain_error("u_value: m and n must be positive");
    if (gcd_abs(p.q, p.m) != 1) throw std::domain_error("u_value: gcd(q, m) must be 1");
}
inline void check_v_params(const UVParams& p) {
    if (p.m < 1 || p.n < 1) throw std::domain_error("v_value: m and n must be positive");
    if (gcd_abs(p.q, 2 * p.m) != 1) throw std::domain_error("v_value: gcd(q, 2m) must be 1");
}
// Both sequences are invariant under q -> q + 2m (the bracket's
// (anti)periodicity cancels the shift), so q can be reduced into [0, 2m)
// before any index arithmetic.
inline long normalize_q(long q, long m) {
    return ((q % (2 * m)) + 2 * m) % (2 * m);
}
} // namespace detail

/// U_l via the finite sum
///   sum_{r=0}^{n} (n-r)/(1+[r=0]) ((-1)^{qr} bracket(2l, l+qr, m) - [l=0]/m).
/// Everything stays in exact rationals; no roots of unity are involved.
inline BigRat u_value(const UVParams& p, long l) {
    detail::check_u_params(p);
    if (l < 0) throw std::domain_error("u_value: l must be nonnegative");
    long q = detail::normalize_q(p.q, p.m);
    BigRat total(0);
    for (long r = 0; r <= p.n; ++r) {
        BigRat weight(p.n - r, r == 0 ? 2 : 1);
        BigRat term(parity_sign(q * r) * bracket(2 * l, l + q * r, p.m, false));
        if (l == 0) term -= BigRat(1, p.m);
        total += weight * term;
    }
    return total;
}

/// V_l via the starred-bracket analogue (no l=0 correction term).
inline BigRat v_value_direct(const UVParams& p, long l) {
    detail::check_v_params(p);
    if (l < 0) throw std::domain_error("v_value: l must be nonnegative");
    long q = detail::normalize_q(p.q, p.m);
    BigRat total(0);
    for (long r = 0; r <= p.n; ++r) {
        BigRat weight(p.n - r, r == 0 ? 2 : 1);
        total += weight * BigRat(parity_sign(q * r) * bracket(2 * l, l + q * r, p.m, true));
    }
    return total;
}

/// V_l with the two computation routes cross-checked: the starred-bracket
/// sum must agree with 2 U_l(2m, n) - U_l(m, n). Disagreement is an
/// implementation bug, not a data condition.
inline BigRat v_value(const UVParams& p, long l) {
    BigRat direct = v_value_direct(p, l);
    BigRat via_u = BigRat(2) * u_value({2 * p.m, p.n, p.q}, l) - u_value({p.m, p.n, p.q}, l);
    if (direct != via_u)
        throw std::logic_error("v_value: routes disagree at " + p.str() + " l=" + std::to_string(l) +
                               " (" + direct.str() + " vs " + via_u.str() + ")");
    return direct;
}

/// A computed prefix of U or V. Entries are exact rationals; entries with
/// l >= 1 are integers by the theorems, and integer_at enforces that.
struct UVSeq {
    UVParams params;
    std::vector<BigRat> values; // indexed by l from 0

    const BigRat& at(long l) const { return values.at(static_cast<std::size_t>(l)); }

    BigInt integer_at(long l) const {
        const BigRat& v = at(l);
        if (!v.is_integer())
            throw std::logic_error("UVSeq: value at l=" + std::to_string(l) + " is " + v.str() +
                                   ", not an integer (" + params.str() + ")");
        return v.as_integer();
    }
};

inline UVSeq u_seq(const UVParams& p, long l_max) {
    if (l_max < 0) throw std::domain_error("u_seq: l_max must be nonnegative");
    UVSeq seq{p, {}};
    seq.values.reserve(static_cast<std::size_t>(l_max) + 1);
    for (long l = 0; l <= l_max; ++l) seq.values.push_back(u_value(p, l));
    return seq;
}

inline UVSeq v_seq(const UVParams& p, long l_max) {
    if (l_max < 0) throw std::domain_error("v_seq: l_max must be nonnegative");
    UVSeq seq{p, {}};
    seq.values.reserve(static_cast<std::size_t>(l_max) + 1);
    for (long l = 0; l <= l_max; ++l) seq.values.push_back(v_value(p, l));
    return seq;
}

enum class UVKind { U, V };

/// The order-floor(m/2) recurrence U_l = sum (-1)^{i-1} a_m(i) U_{l-i}
/// (resp. the b_m analogue for V, order floor((m+1)/2)), checked for every
/// admissible l up to l_max. Sequence values come from the finite sums, so
/// the recurrence is tested against an independent route.
inline CheckReport uv_recurrence_check(const UVParams& p, long l_max, UVKind which) {
    bool is_u = (which == UVKind::U);
    if (is_u) detail::check_u_params(p); else detail::check_v_params(p);
    long order = is_u ? p.m / 2 : (p.m + 1) / 2;
    if (l_max < order)
        throw std::domain_error("uv_recurrence_check: l_max below the recurrence order");
    UVSeq seq = is_u ? u_seq(p, l_max) : v_seq(p, l_max);
    CoeffRow row = coeff_row(p.m, is_u ? CoeffKind::a : CoeffKind::b);
    CheckReport report(std::string(is_u ? "U " : "V ") + p.str() + " l=" +
                       std::to_string(order) + ".." + std::to_string(l_max));
    for (long l = order; l <= l_max; ++l) {
        BigRat rhs(0);
        for (long i = 1; i <= order; ++i)
            rhs += parity_sign(i - 1) * BigRat(row.values[static_cast<std::size_t>(i - 1)]) *
                   seq.at(l - i);
        report.require_equal(p.str() + " l=" + std::to_string(l), seq.at(l), rhs);
    }
    return report;
}

/// Closed forms: U_0(m,n) = n(m-n)/(2m) and V_0(m,n) = n/2 for n = 1..m;
/// U_l(m,1) = V_l(m,1) = binom(2l-1, l) for 1 <= l <= floor((m+1)/2), m > 1.
/// The V half runs only when gcd(q, 2m) = 1.
inline CheckReport closed_form_check(long m, long q, long l_hi) {
    if (m < 1) throw std::domain_error("closed_form_check: m must be positive");
    if (detail::gcd_abs(q, m) != 1) throw std::domain_error("closed_form_check: gcd(q, m) must be 1");
    bool with_v = (detail::gcd_abs(q, 2 * m) == 1);
    CheckReport report("m=" + std::to_string(m) + " q=" + std::to_string(q) +
                       " l<=" + std::to_string(l_hi) + (with_v ? " [U and V]" : " [U only]"));
    for (long n = 1; n <= m; ++n) {
        UVParams p{m, n, q};
        report.require_equal("U_0 " + p.str(), u_value(p, 0), BigRat(BigInt(n) * (m - n), BigInt(2 * m)));
        if (with_v)
            report.require_equal("V_0 " + p.str(), v_value(p, 0), BigRat(n, 2));
    }
    if (m > 1) {
        long top = std::min(l_hi, (m + 1) / 2);
        for (long l = 1; l <= top; ++l) {
            UVParams p{m, 1, q};
            BigRat expect(binom_int(2 * l - 1, l));
            report.require_equal("U_" + std::to_string(l) + " " + p.str(), u_value(p, l), expect);
            if (with_v)
                report.require_equal("V_" + std::to_string(l) + " " + p.str(), v_value(p, l), expect);
        }
    }
    return report;
}

} // namespace binsum
