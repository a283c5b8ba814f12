#pragma once

#include "binsum/numtheory.hpp"

#include <stdexcept>

namespace binsum {

namespace detail {
inline void check_sum_args(long n, long m, const char* who) {
    if (n < 0) throw std::domain_error(std::string(who) + ": n must be nonnegative");
    if (m < 1) throw std::domain_error(std::string(who) + ": m must be positive");
}
} // namespace detail

/// sum of binom(n, k) over 0 <= k <= n with k = r (mod m). Computed by
/// direct summation; this is the oracle every recurrence check is tested
/// against, so no recurrence-based shortcut belongs here.
inline BigInt msum(long n, long r, long m) {
    detail::check_sum_args(n, m, "msum");
    BigInt total = 0;
    long k0 = ((r % m) + m) % m;
    for (long k = k0; k <= n; k += m) total += binom_int(n, k);
    return total;
}

/// sum of (-1)^{(k-r)/m} binom(n, k) over the same range. Antiperiodic in r:
/// altsum(n, r+m, m) = -altsum(n, r, m).
inline BigInt altsum(long n, long r, long m) {
    detail::check_sum_args(n, m, "altsum");
    BigInt total = 0;
    long k0 = ((r % m) + m) % m;
    int sign = parity_sign((k0 - r) / m);
    for (long k = k0; k <= n; k += m) {
        if (sign > 0) total += binom_int(n, k);
        else total -= binom_int(n, k);
        sign = -sign;
    }
    return total;
}

/// Parity-of-m dispatch between the two sums: the plain bracket picks msum
/// for even m and altsum for odd m; the starred bracket picks the opposite.
inline BigInt bracket(long n, long r, long m, bool star) {
    detail::check_sum_args(n, m, "bracket");
    bool even = (m % 2 == 0);
    return (even != star) ? msum(n, r, m) : altsum(n, r, m);
}

enum class SumVariant { plain, alternate, bracket, star };

/// A residue-class binomial sum query (n, r, m) plus the variant selector.
struct SumQuery {
    long n;
    long r;
    long m;
    SumVariant variant;

    BigInt eval() const {
        switch (variant) {
            case SumVariant::plain: return msum(n, r, m);
            case SumVariant::alternate: return altsum(n, r, m);
            case SumVariant::bracket: return binsum::bracket(n, r, m, false);
            case SumVariant::star: return binsum::bracket(n, r, m, true);
        }
        throw std::logic_error("SumQuery: bad variant");
    }
};

} // namespace binsum
