#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seidel/matrix.hpp"
#include "seidel/polynomial.hpp"

namespace seidel {

/// Exact characteristic polynomial det(xI - S) of a Seidel matrix.
/// Monic with zero trace coefficient; both are enforced at construction.
class CharPolynomial {
public:
    /// coeffs[i] is the coefficient of x^i; requires coeffs[n] = 1 and,
    /// for n >= 1, coeffs[n-1] = 0.
    static CharPolynomial from_coeffs(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Space-separated decimal coefficients from degree 0 upward.
    std::string render() const;

    bool operator==(const CharPolynomial&) const = default;

private:
    explicit CharPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<Int> coeffs_;
};

/// Faddeev-LeVerrier over arbitrary-precision integers. Every division in
/// the recurrence is exact; inexactness would be an implementation bug and
/// trips an internal assertion.
CharPolynomial char_poly(const SeidelMatrix& s);

/// True iff p(-x) = (-1)^n p(x), i.e. every coefficient whose index has
/// parity different from n vanishes.
bool is_symmetric_spectrum(const CharPolynomial& p);

/// det(S) = (-1)^n * p(0).
Int determinant(const CharPolynomial& p);

/// Distinct real roots in (lo, hi], multiplicity-safe (Sturm chain on the
/// squarefree part).
int count_roots_in_interval(const CharPolynomial& p, const Rat& lo, const Rat& hi);

/// True iff p = (x^2 - (n-1))^(n/2); false whenever n is odd.
bool certify_conference_spectrum(const CharPolynomial& p, int n);

/// Multiplicity of the eigenvalue 0, i.e. the largest k with x^k | p.
int zero_eigenvalue_multiplicity(const CharPolynomial& p);

struct SpectrumSummary {
    bool is_symmetric = false;
    Int det;
    int zero_multiplicity = 0;
    /// (lo, hi, distinct-root count) over a unit partition of [-B, B] where
    /// B bounds every eigenvalue.
    std::vector<std::tuple<Rat, Rat, int>> interval_counts;
};

SpectrumSummary summarize_spectrum(const CharPolynomial& p);

} // namespace seidel
