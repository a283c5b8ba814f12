#pragma once

#include "binsum/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace binsum {

/// One failing instance of an identity or congruence: the inputs and both
/// sides' exact values.
struct Counterexample {
    std::string inputs;
    BigRat lhs;
    BigRat rhs;
};

/// Outcome of a verification. Passes exactly when no counterexample was
/// recorded.
class CheckReport {
public:
    explicit CheckReport(std::string swept) : swept_(std::move(swept)) {}

    void fail(std::string inputs, BigRat lhs, BigRat rhs) {
        counterexamples_.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
    }

    void require_equal(const std::string& inputs, const BigRat& lhs, const BigRat& rhs) {
        if (lhs != rhs) fail(inputs, lhs, rhs);
    }

    /// Record (lhs, rhs) as a counterexample unless cond holds.
    void require(bool cond, const std::string& inputs, const BigRat& lhs, const BigRat& rhs) {
        if (!cond) fail(inputs, lhs, rhs);
    }

    /// Fold another report's counterexamples into this one (sweep drivers).
    void merge(const CheckReport& other) {
        counterexamples_.insert(counterexamples_.end(),
                                other.counterexamples_.begin(), other.counterexamples_.end());
    }

    bool pass() const { return counterexamples_.empty(); }
    const std::string& swept() const { return swept_; }
    const std::vector<Counterexample>& counterexamples() const { return counterexamples_; }

private:
    std::string swept_;
    std::vector<Counterexample> counterexamples_;
};

} // namespace binsum
