#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace binsum {

/// Arbitrary-precision integer. All integer quantities in the library use
/// this type, so sweeps never hit a machine-width overflow.
using BigInt = mpz_class;

/// Exact rational kept in canonical form at all times: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Every constructor and every arithmetic result is
/// canonical, so equality is structural.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}
    BigRat(const BigInt& n) : v_(n) {}
    BigRat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }

    /// Integer value; throws if the denominator is not 1.
    BigInt as_integer() const {
        if (!is_integer())
            throw std::logic_error("BigRat: " + str() + " is not an integer");
        return v_.get_num();
    }

    /// Integral part, rounded toward -infinity.
    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    /// Fractional part; value = floor() + frac() with 0 <= frac() < 1.
    BigRat frac() const { return *this - BigRat(floor()); }

    int sign() const { return sgn(v_); }

    /// "num/den" in lowest terms, or a bare decimal string for integers.
    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }

    friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.v_), raw_t{}); }
    friend BigRat operator+(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ + b.v_), raw_t{}); }
    friend BigRat operator-(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ - b.v_), raw_t{}); }
    friend BigRat operator*(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ * b.v_), raw_t{}); }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.sign() == 0) throw std::domain_error("BigRat: division by zero");
        return BigRat(mpq_class(a.v_ / b.v_), raw_t{});
    }

    BigRat& operator+=(const BigRat& b) { v_ += b.v_; return *this; }
    BigRat& operator-=(const BigRat& b) { v_ -= b.v_; return *this; }
    BigRat& operator*=(const BigRat& b) { v_ *= b.v_; return *this; }
    BigRat& operator/=(const BigRat& b) { *this = *this / b; return *this; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

private:
    struct raw_t {};
    BigRat(mpq_class q, raw_t) : v_(std::move(q)) {}
    mpq_class v_;
};

/// 2^e as an exact rational; e may be negative.
inline BigRat pow2(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? BigRat(p) : BigRat(BigInt(1), p);
}

/// b^e for a nonnegative exponent.
inline BigInt pow_int(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Floor division of machine integers (b > 0).
inline long floor_div(long a, long b) {
    long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// -1 to an integer power that may be negative.
inline int parity_sign(long k) {
    return (k % 2 == 0) ? 1 : -1;
}

} // namespace binsum
