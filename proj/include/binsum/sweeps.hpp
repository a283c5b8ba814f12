#pragma once

#include "binsum/bernoulli_euler.hpp"
#include "binsum/charpoly.hpp"
#include "binsum/identities.hpp"
#include "binsum/residue_checks.hpp"
#include "binsum/uv_sequences.hpp"

#include <numeric>
#include <string>
#include <vector>

// Full-range verification drivers. Defaults pin the ranges the library is
// certified on; the CLI exposes the same knobs.
namespace binsum::sweeps {

inline const std::vector<long>& default_primes() {
    static const std::vector<long> ps{3, 5, 7, 11, 13};
    return ps;
}

/// Known values of a_m(i) (then b_m(j)) for m = 2..12, used as regression
/// anchors for the coefficient layer and the table command.
inline const std::vector<std::vector<long>>& reference_table(int which) {
    static const std::vector<std::vector<long>> table_a{
        {4}, {3}, {6, 8}, {5, 5}, {8, 19, 12}, {7, 14, 7}, {10, 34, 44, 16},
        {9, 27, 30, 9}, {12, 53, 104, 85, 20}, {11, 44, 77, 55, 11},
        {14, 76, 200, 259, 146, 24}};
    static const std::vector<std::vector<long>> table_b{
        {2}, {5, 4}, {4, 2}, {7, 13, 4}, {6, 9, 2}, {9, 26, 25, 4}, {8, 20, 16, 2},
        {11, 43, 70, 41, 4}, {10, 35, 50, 25, 2}, {13, 64, 147, 155, 61, 4},
        {12, 54, 112, 105, 36, 2}};
    if (which != 1 && which != 2) throw std::domain_error("reference_table: which must be 1 or 2");
    return which == 1 ? table_a : table_b;
}

/// Computed a/b rows against the reference values, cell for cell.
inline CheckReport tables(long m_lo = 2, long m_hi = 12) {
    if (m_lo < 2 || m_hi > 12 || m_lo > m_hi)
        throw std::domain_error("tables: reference values cover m = 2..12 only");
    CheckReport report("tables 1 and 2, m=" + std::to_string(m_lo) + ".." + std::to_string(m_hi));
    for (int which = 1; which <= 2; ++which) {
        const auto& ref = reference_table(which);
        for (long m = m_lo; m <= m_hi; ++m) {
            CoeffRow row = coeff_row(m, which == 1 ? CoeffKind::a : CoeffKind::b);
            const auto& want = ref.at(static_cast<std::size_t>(m - 2));
            std::string at = "table " + std::to_string(which) + " m=" + std::to_string(m);
            if (row.values.size() != want.size()) {
                report.fail(at + " [row length]", BigRat(static_cast<long>(row.values.size())),
                            BigRat(static_cast<long>(want.size())));
                continue;
            }
            for (std::size_t i = 0; i < want.size(); ++i)
                report.require_equal(at + " i=" + std::to_string(i + 1),
                                     BigRat(row.values[i]), BigRat(want[i]));
        }
    }
    return report;
}

inline CheckReport thm11(long m_max = 12, long n_max = 40) {
    CheckReport report("m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max) + " k in [-2, n+2]");
    for (long m = 1; m <= m_max; ++m)
        for (long n = 2 * ((m - 1) / 2); n <= n_max; ++n)
            for (long k = -2; k <= n + 2; ++k)
                report.merge(thm11_check(m, k, n));
    return report;
}

inline CheckReport thm12(long m_max = 12, long n_max = 40) {
    CheckReport report("both variants, m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max) +
                       " k in [-2, n+2]");
    for (long m = 1; m <= m_max; ++m) {
        for (long n = 2 * ((m + 1) / 2); n <= n_max; ++n)
            for (long k = -2; k <= n + 2; ++k)
                report.merge(thm12_check(m, k, n, Thm12Variant::plain7));
        for (long n = 2 * (m / 2); n <= n_max; ++n)
            for (long k = -2; k <= n + 2; ++k)
                report.merge(thm12_check(m, k, n, Thm12Variant::alternate8));
    }
    return report;
}

inline CheckReport cor11(long m_max = 12, long n_max = 40) {
    CheckReport report("m<=" + std::to_string(m_max) + " k in [0, 2m) n<=" + std::to_string(n_max));
    for (long m = 1; m <= m_max; ++m)
        for (long k = 0; k < 2 * m; ++k)
            report.merge(cor11_sequences(m, k, n_max).report);
    return report;
}

inline CheckReport monotone(long m_max = 12, long n_max = 40) {
    CheckReport report("m=3.." + std::to_string(m_max) + " n=1.." + std::to_string(n_max));
    for (long m = 3; m <= m_max; ++m)
        for (long n = 1; n <= n_max; ++n)
            report.merge(monotonicity_profile(m, n));
    return report;
}

/// Glaisher/Hermite over n >= 1 (the congruence's own hypothesis; n = 0 is
/// a genuine counterexample).
inline CheckReport hermite_glaisher(const std::vector<long>& ps = default_primes(), long n_max = 40) {
    CheckReport report("p in {3..13} n=1.." + std::to_string(n_max) + " r in [0, p)");
    for (long p : ps)
        for (long n = 1; n <= n_max; ++n)
            for (long r = 0; r < p; ++r)
                report.merge(hermite_glaisher_check(p, n, r));
    return report;
}

inline CheckReport fleck_sweep(const std::vector<long>& ps = {2, 3, 5, 7, 11, 13}, long n_max = 80) {
    CheckReport report("p in {2..13} n=1.." + std::to_string(n_max) + " r in [0, p)");
    for (long p : ps)
        for (long n = 1; n <= n_max; ++n)
            for (long r = 0; r < p; ++r) {
                FleckReport f = fleck(p, n, r);
                report.require(f.pass,
                               "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                   " r=" + std::to_string(r) + " [valuation " + f.valuation.str() +
                                   " vs bound]",
                               BigRat(f.sum), BigRat(f.bound));
            }
    return report;
}

inline CheckReport catalan_congruence(const std::vector<long>& ps = {3, 5, 7, 11, 13, 17, 19}) {
    CheckReport report("p in {3,5,7,11,13,17,19}");
    for (long p : ps) report.merge(catalan_congruence_check(p));
    return report;
}

inline CheckReport lemma21(long l_max = 8, long grid = 10) {
    CheckReport report("l<=" + std::to_string(l_max) + ", integer x,y in [-" + std::to_string(grid) +
                       ", " + std::to_string(grid) + "]");
    for (long l = 0; l <= l_max; ++l)
        for (long x = -grid; x <= grid; ++x)
            for (long y = -grid; y <= grid; ++y)
                report.merge(lemma_2_1_check(l, BigRat(x), BigRat(y)));
    return report;
}

inline CheckReport curious(long m_max = 12, long grid = 10) {
    CheckReport report("m<=" + std::to_string(m_max) + ", integer x,y in [-" + std::to_string(grid) +
                       ", " + std::to_string(grid) + "]");
    for (long m = 0; m <= m_max; ++m)
        for (long x = -grid; x <= grid; ++x)
            for (long y = -grid; y <= grid; ++y)
                report.merge(curious_identity_check(m, BigRat(x), BigRat(y)));
    return report;
}

inline CheckReport gould(long m_max = 40) {
    CheckReport report("m=1.." + std::to_string(m_max));
    for (long m = 1; m <= m_max; ++m) report.merge(gould_check(m));
    return report;
}

inline CheckReport raabe(long m_max = 6, long n_max = 10) {
    const std::vector<BigRat> xs{BigRat(0), BigRat(1, 2), BigRat(1, 3),
                                 BigRat(2, 5), BigRat(7, 4), BigRat(-1, 3)};
    CheckReport report("m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max) +
                       " x in {0, 1/2, 1/3, 2/5, 7/4, -1/3}");
    for (long m = 1; m <= m_max; ++m)
        for (long n = 1; n <= n_max; ++n)
            for (const BigRat& x : xs)
                report.merge(raabe_check(m, n, x));
    return report;
}

inline CheckReport lemma32(long n_max = 12, long grid = 12) {
    CheckReport report("n<=" + std::to_string(n_max) + " x in {k/6 : -" + std::to_string(grid) +
                       "<=k<=" + std::to_string(grid) + "}");
    for (long n = 1; n <= n_max; ++n)
        for (long k = -grid; k <= grid; ++k)
            report.merge(lemma32_check(n, BigRat(k, 6)));
    return report;
}

inline CheckReport cheb_relations(long n_max = 40) {
    CheckReport report("n=1.." + std::to_string(n_max));
    for (long n = 1; n <= n_max; ++n) report.merge(cheb_relation_check(n));
    return report;
}

/// C_n = prod_{d|n} A_d as an exact polynomial identity; also exercises
/// a_poly's exact division on every n in range.
inline CheckReport factorization(long n_max = 60) {
    CheckReport report("n=1.." + std::to_string(n_max));
    for (long n = 1; n <= n_max; ++n) {
        IntPoly prod{1};
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * a_poly(d);
        detail::require_poly_equal(report, "n=" + std::to_string(n) + " [C_n vs prod A_d]",
                                   c_poly(n), prod);
    }
    return report;
}

inline std::vector<long> valid_q_list(long m, bool for_v) {
    std::vector<long> qs;
    for (long q = 1; q <= 2 * m; ++q)
        if (std::gcd(q, for_v ? 2 * m : m) == 1) qs.push_back(q);
    return qs;
}

inline CheckReport uv_recurrences(long m_max = 10) {
    CheckReport report("m<=" + std::to_string(m_max) + " n<=m, valid q in [1, 2m], l<=2m+10");
    for (long m = 1; m <= m_max; ++m) {
        long l_max = 2 * m + 10;
        for (long n = 1; n <= m; ++n) {
            for (long q : valid_q_list(m, false))
                report.merge(uv_recurrence_check({m, n, q}, l_max, UVKind::U));
            for (long q : valid_q_list(m, true))
                report.merge(uv_recurrence_check({m, n, q}, l_max, UVKind::V));
        }
    }
    return report;
}

inline CheckReport closed_forms(long m_max = 10) {
    CheckReport report("m<=" + std::to_string(m_max) + ", valid q in [1, 2m]");
    for (long m = 1; m <= m_max; ++m)
        for (long q = 1; q <= 2 * m; ++q)
            if (std::gcd(q, m) == 1)
                report.merge(closed_form_check(m, q, 2 * m + 10));
    return report;
}

/// Integrality and q-sign symmetry of the U/V values over the acceptance
/// grid; route agreement for V is enforced inside v_value itself.
inline CheckReport uv_integrality(long m_max = 10) {
    CheckReport report("m<=" + std::to_string(m_max) + " n<=m, valid q, 1<=l<=2m+10");
    for (long m = 1; m <= m_max; ++m) {
        long l_max = 2 * m + 10;
        for (long n = 1; n <= m; ++n) {
            for (long q : valid_q_list(m, false)) {
                UVSeq us = u_seq({m, n, q}, l_max);
                UVSeq neg = u_seq({m, n, -q}, l_max);
                for (long l = 0; l <= l_max; ++l) {
                    std::string at = "U m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                     " q=" + std::to_string(q) + " l=" + std::to_string(l);
                    if (l >= 1)
                        report.require(us.at(l).is_integer(), at + " [integrality]", us.at(l), BigRat(0));
                    report.require_equal(at + " [q sign symmetry]", us.at(l), neg.at(l));
                }
            }
            for (long q : valid_q_list(m, true)) {
                UVSeq vs = v_seq({m, n, q}, l_max);
                for (long l = 1; l <= l_max; ++l)
                    report.require(vs.at(l).is_integer(),
                                   "V m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                       " q=" + std::to_string(q) + " l=" + std::to_string(l) +
                                       " [integrality]",
                                   vs.at(l), BigRat(0));
            }
        }
    }
    return report;
}

inline CheckReport gs(const std::vector<long>& ps = default_primes(), long m_max = 10) {
    CheckReport report("p in {3..13} m<=" + std::to_string(m_max) +
                       " (p!|m), n in [1, m-1], q in [1, m] with gcd(q,m)=1, p=+-q (mod m)");
    for (long p : ps)
        for (long m = 1; m <= m_max; ++m) {
            if (m % p == 0) continue;
            for (long n = 1; n < m; ++n)
                for (long q = 1; q <= m; ++q)
                    if (std::gcd(q, m) == 1 && ((p - q) % m == 0 || (p + q) % m == 0))
                        report.merge(gs_check(p, m, n, q));
        }
    return report;
}

inline CheckReport euler16(const std::vector<long>& ps = default_primes(), long m_max = 10) {
    CheckReport report("p in {3..13} m<=" + std::to_string(m_max) +
                       ", n in [1, m-1], q in [1, 2m] with gcd(q,2m)=1, p=+-q (mod 2m)");
    for (long p : ps)
        for (long m = 1; m <= m_max; ++m)
            for (long n = 1; n < m; ++n)
                for (long q = 1; q <= 2 * m; ++q)
                    if (std::gcd(q, 2 * m) == 1 &&
                        ((p - q) % (2 * m) == 0 || (p + q) % (2 * m) == 0))
                        report.merge(euler_cong_check(p, m, n, q));
    return report;
}

inline CheckReport lemma33(const std::vector<long>& ps = default_primes(), long m_max = 10) {
    CheckReport report("p in {3..13} m<=" + std::to_string(m_max) + " (p!|m), n in [1, 2m]");
    for (long p : ps)
        for (long m = 1; m <= m_max; ++m) {
            if (m % p == 0) continue;
            for (long n = 1; n <= 2 * m; ++n)
                report.merge(lemma33_check(p, m, n));
        }
    return report;
}

inline CheckReport harmonic(const std::vector<long>& ps = default_primes(), long m_max = 10) {
    CheckReport report("p in {3..13} m<=" + std::to_string(m_max) + " (p!|m), n in [0, m)");
    for (long p : ps)
        for (long m = 1; m <= m_max; ++m) {
            if (m % p == 0) continue;
            for (long n = 0; n < m; ++n)
                report.merge(harmonic_check(p, m, n));
        }
    return report;
}

inline CheckReport special38(long p_max = 31, long n_max = 12) {
    CheckReport report("m in {4,5,6}, odd primes p<=" + std::to_string(p_max) +
                       " (p!|m), n<=" + std::to_string(n_max) + " coprime to m");
    for (long m : {4L, 5L, 6L})
        for (long p = 3; p <= p_max; p += 2) {
            if (!is_prime(p) || m % p == 0) continue;
            for (long n = 1; n <= n_max; ++n)
                if (std::gcd(m, n) == 1)
                    report.merge(special_m_check(p, m, n));
        }
    return report;
}

} // namespace binsum::sweeps
