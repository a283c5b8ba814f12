#pragma once

#include "binsum/check_report.hpp"
#include "binsum/numtheory.hpp"

#include <string>

namespace binsum {

/// sum_{j=0}^{l} (-1)^{l-j} binom(x+y+j, l-j) binom(y+2j, j)
///   = sum_{j=0}^{l} binom(l-x, j)
/// for any nonnegative l and rational x, y.
inline CheckReport lemma_2_1_check(long l, const BigRat& x, const BigRat& y) {
    if (l < 0) throw std::domain_error("lemma_2_1_check: l must be nonnegative");
    BigRat lhs(0), rhs(0);
    for (long j = 0; j <= l; ++j) {
        BigRat term = binom_general(x + y + BigRat(j), l - j) * binom_general(y + BigRat(2 * j), j);
        lhs += parity_sign(l - j) * term;
        rhs += binom_general(BigRat(l) - x, j);
    }
    CheckReport report("l=" + std::to_string(l) + " x=" + x.str() + " y=" + y.str());
    report.require_equal(report.swept(), lhs, rhs);
    return report;
}

/// (x+m+1) sum_{i=0}^{m} (-1)^i binom(x+y+i, m-i) binom(y+2i, i)
///   = sum_{i=0}^{m} binom(x+i, m-i) (-4)^i + (x-m) binom(x, m)
inline CheckReport curious_identity_check(long m, const BigRat& x, const BigRat& y) {
    if (m < 0) throw std::domain_error("curious_identity_check: m must be nonnegative");
    BigRat sum(0), alt(0), four(1);
    for (long i = 0; i <= m; ++i) {
        sum += parity_sign(i) * binom_general(x + y + BigRat(i), m - i) *
               binom_general(y + BigRat(2 * i), i);
        alt += binom_general(x + BigRat(i), m - i) * four;
        four *= BigRat(-4);
    }
    BigRat lhs = (x + BigRat(m + 1)) * sum;
    BigRat rhs = alt + (x - BigRat(m)) * binom_general(x, m);
    CheckReport report("m=" + std::to_string(m) + " x=" + x.str() + " y=" + y.str());
    report.require_equal(report.swept(), lhs, rhs);
    return report;
}

/// sum_{i=0}^{floor((m-1)/2)} (-1)^i binom(m-1-i, i) 2^{m-1-2i} = m
inline CheckReport gould_check(long m) {
    if (m < 1) throw std::domain_error("gould_check: m must be positive");
    BigInt lhs = 0;
    for (long i = 0; 2 * i <= m - 1; ++i)
        lhs += parity_sign(i) * binom_int(m - 1 - i, i) * pow_int(2, static_cast<unsigned long>(m - 1 - 2 * i));
    CheckReport report("m=" + std::to_string(m));
    report.require_equal(report.swept(), BigRat(lhs), BigRat(m));
    return report;
}

} // namespace binsum
