#pragma once

#include "binsum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binsum {

struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/// Dense integer-coefficient polynomial, coefficients in ascending degree
/// with no trailing zero; the zero polynomial is the empty list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) c_.emplace_back(c);
        trim();
    }

    static IntPoly monomial(BigInt coeff, std::size_t deg) {
        std::vector<BigInt> c(deg + 1, BigInt(0));
        c[deg] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    /// Coefficient of x^i (0 beyond the degree).
    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    const BigInt& leading() const {
        if (c_.empty()) throw std::logic_error("IntPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const BigInt& s, const IntPoly& p) {
        std::vector<BigInt> r(p.c_);
        for (auto& c : r) c *= s;
        return IntPoly(std::move(r));
    }

    /// this(inner), by Horner over polynomial arithmetic.
    IntPoly compose(const IntPoly& inner) const {
        IntPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inner;
            acc = acc + IntPoly::monomial(c_[i], 0);
        }
        return acc;
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    BigRat eval(const BigRat& x) const {
        BigRat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + BigRat(c_[i]);
        return acc;
    }

    /// Human-readable form, highest degree first: "x^2 - 4*x + 3".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const BigInt& c = c_[i];
            if (c == 0) continue;
            BigInt mag = abs(c);
            if (out.empty()) out += (c < 0) ? "-" : "";
            else out += (c < 0) ? " - " : " + ";
            bool unit = (mag == 1);
            if (i == 0) out += mag.get_str();
            else {
                if (!unit) out += mag.get_str() + "*";
                out += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// Quotient q with a = b * q exactly over Z[x]; throws NotDivisible when the
/// remainder is nonzero or a coefficient division fails, which signals a
/// broken factorization claim upstream.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree())
        throw NotDivisible("exact_div: " + a.str() + " not divisible by " + b.str());
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lead = b.leading();
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt top = rem[i + static_cast<std::size_t>(b.degree())];
        BigInt qi, r;
        mpz_tdiv_qr(qi.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw NotDivisible("exact_div: " + a.str() + " not divisible by " + b.str());
        q[i] = qi;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(b.degree()); ++j)
            rem[i + j] -= qi * b.coeff(j);
    }
    for (const BigInt& c : rem)
        if (c != 0) throw NotDivisible("exact_div: " + a.str() + " not divisible by " + b.str());
    return IntPoly(std::move(q));
}

} // namespace binsum
