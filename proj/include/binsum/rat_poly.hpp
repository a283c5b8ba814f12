#pragma once

#include "binsum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace binsum {

/// Dense rational-coefficient polynomial, ascending degree, no trailing
/// zero. Evaluation and composition are exact.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }

    static RatPoly monomial(BigRat coeff, std::size_t deg) {
        std::vector<BigRat> c(deg + 1, BigRat(0));
        c[deg] = std::move(coeff);
        return RatPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const BigRat& coeff(std::size_t i) const {
        static const BigRat zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<BigRat>& coeffs() const { return c_; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<BigRat> r(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return RatPoly(std::move(r));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<BigRat> r(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const BigRat& s, const RatPoly& p) {
        std::vector<BigRat> r(p.c_);
        for (auto& c : r) c *= s;
        return RatPoly(std::move(r));
    }

    BigRat eval(const BigRat& x) const {
        BigRat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// this(s * x): coefficient k picks up s^k.
    RatPoly scale_arg(const BigRat& s) const {
        std::vector<BigRat> r(c_);
        BigRat power(1);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] *= power;
            power *= s;
        }
        return RatPoly(std::move(r));
    }

    RatPoly compose(const RatPoly& inner) const {
        RatPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inner;
            acc = acc + RatPoly::monomial(c_[i], 0);
        }
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == BigRat(0)) c_.pop_back();
    }
    std::vector<BigRat> c_;
};

} // namespace binsum
