#pragma once

#include <stdexcept>
#include <string>

#include "seidel/matrix.hpp"

namespace seidel {

/// Raised when a Seidel matrix fails the conference check S*S^T = (n-1)I.
/// Reports the first offending inner-product position and its value.
class ConferenceError : public std::runtime_error {
public:
    ConferenceError(int i, int j, long long value)
        : std::runtime_error("not a conference matrix: inner product at (" + std::to_string(i) +
                             "," + std::to_string(j) + ") is " + std::to_string(value)),
          i_(i), j_(j), value_(value) {}
    int row() const { return i_; }
    int col() const { return j_; }
    long long value() const { return value_; }

private:
    int i_;
    int j_;
    long long value_;
};

/// A Seidel matrix C with C*C^T = (n-1)I, verified exactly over the integers.
class ConferenceMatrix {
public:
    /// Throws ConferenceError if the product check fails.
    static ConferenceMatrix validate(SeidelMatrix s);

    const SeidelMatrix& seidel() const { return inner_; }
    int order() const { return inner_.order(); }

private:
    explicit ConferenceMatrix(SeidelMatrix s) : inner_(std::move(s)) {}
    SeidelMatrix inner_;
};

} // namespace seidel
