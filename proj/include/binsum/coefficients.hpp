#pragma once

#include "binsum/check_report.hpp"
#include "binsum/numtheory.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binsum {

/// c_m(i) = (m^2 + m - 2i) / ((m-i)(m+1-i)) * binom(m+1-i, i) for
/// 0 <= i <= floor((m+1)/2), with the single closed-formula gap c_1(1) = 4.
/// The division is exact (integrality is part of the theorem); a remainder
/// would indicate a bug, not bad input.
inline BigInt c_coeff(long m, long i) {
    if (m < 1) throw std::domain_error("c_coeff: m must be positive");
    if (i < 0 || i > (m + 1) / 2) throw std::domain_error("c_coeff: index out of range");
    if (m == 1 && i == 1) return 4;
    BigInt num = (BigInt(m) * m + m - 2 * i) * binom_int(m + 1 - i, i);
    BigInt den = BigInt(m - i) * (m + 1 - i);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("c_coeff: non-exact division");
    return q;
}

/// d_m(i) = m/(m-i) * binom(m-i, i) for 0 <= i <= floor(m/2).
inline BigInt d_coeff(long m, long i) {
    if (m < 1) throw std::domain_error("d_coeff: m must be positive");
    if (i < 0 || i > m / 2) throw std::domain_error("d_coeff: index out of range");
    BigInt num = BigInt(m) * binom_int(m - i, i);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), BigInt(m - i).get_mpz_t());
    if (r != 0) throw std::logic_error("d_coeff: non-exact division");
    return q;
}

enum class CoeffKind { a, b, c, d };

/// One row of recurrence coefficients, indexed from i = 1 (the i = 0 term is
/// always 1 and stays implicit in recurrence application).
struct CoeffRow {
    long m;
    CoeffKind kind;
    std::vector<BigInt> values;
};

inline CoeffRow coeff_row(long m, CoeffKind kind) {
    long len;
    bool use_c;
    switch (kind) {
        case CoeffKind::a: len = m / 2; use_c = (m % 2 == 0); break;
        case CoeffKind::b: len = (m + 1) / 2; use_c = (m % 2 != 0); break;
        case CoeffKind::c: len = (m + 1) / 2; use_c = true; break;
        case CoeffKind::d: len = m / 2; use_c = false; break;
        default: throw std::logic_error("coeff_row: bad kind");
    }
    CoeffRow row{m, kind, {}};
    row.values.reserve(static_cast<std::size_t>(len));
    for (long i = 1; i <= len; ++i)
        row.values.push_back(use_c ? c_coeff(m, i) : d_coeff(m, i));
    return row;
}

/// The recurrence coefficients a_m (order floor(m/2)) and b_m (order
/// floor((m+1)/2)): a_m = c_m for even m and d_m for odd m, b_m the other
/// way around.
inline std::pair<CoeffRow, CoeffRow> ab_coeffs(long m) {
    if (m < 1) throw std::domain_error("ab_coeffs: m must be positive");
    return {coeff_row(m, CoeffKind::a), coeff_row(m, CoeffKind::b)};
}

/// Appendix-style table: which = 1 lists a_m rows, which = 2 lists b_m rows.
inline std::vector<CoeffRow> coeff_table(int which, long m_lo, long m_hi) {
    if (which != 1 && which != 2) throw std::domain_error("coeff_table: which must be 1 or 2");
    if (m_lo < 2 || m_lo > m_hi) throw std::domain_error("coeff_table: need 2 <= m_lo <= m_hi");
    std::vector<CoeffRow> rows;
    for (long m = m_lo; m <= m_hi; ++m)
        rows.push_back(coeff_row(m, which == 1 ? CoeffKind::a : CoeffKind::b));
    return rows;
}

/// (-1)^{i-1} c_{p-1}(i) = (-1)^i d_{p-1}(i) = C_i (mod p) for
/// i = 1..(p-1)/2 and odd prime p, C_i the Catalan numbers.
inline CheckReport catalan_congruence_check(long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("catalan_congruence_check: p must be an odd prime");
    CheckReport report("p=" + std::to_string(p) + " i=1..(p-1)/2");
    for (long i = 1; 2 * i <= p - 1; ++i) {
        BigRat cat(catalan(i));
        BigRat c_side(parity_sign(i - 1) * c_coeff(p - 1, i));
        BigRat d_side(parity_sign(i) * d_coeff(p - 1, i));
        std::string at = "p=" + std::to_string(p) + " i=" + std::to_string(i);
        report.require_equal(at + " [c vs Catalan]",
                             BigRat(mod_p_reduce(c_side, p)), BigRat(mod_p_reduce(cat, p)));
        report.require_equal(at + " [d vs Catalan]",
                             BigRat(mod_p_reduce(d_side, p)), BigRat(mod_p_reduce(cat, p)));
    }
    return report;
}

} // namespace binsum
