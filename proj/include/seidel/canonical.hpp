#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "seidel/matrix.hpp"

namespace seidel {

/// Complete invariant for switching-isomorphism: the order together with
/// the least canonical bit-string over all choices of normalized vertex.
/// Bit-string length is (n-1)(n-2)/2 (upper triangle of the residual graph
/// on the n-1 non-normalized vertices).
class CanonicalForm {
public:
    CanonicalForm(int order, std::vector<std::uint8_t> bits)
        : order_(order), bits_(std::move(bits)) {}

    int order() const { return order_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    /// Deduplication key: "<order>:<hex>" with bits packed MSB-first.
    std::string render() const;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;

private:
    int order_;
    std::vector<std::uint8_t> bits_;
};

/// Switch so that row v becomes all +1 off-diagonal: d[j] = s[v][j] for
/// j != v, d[v] = +1. Idempotent for fixed v.
SeidelMatrix normalize_at_vertex(const SeidelMatrix& s, int v);

/// Deterministic canonical form; exhaustive labeling with pruning, intended
/// for n <= ~16.
CanonicalForm canonical_form(const SeidelMatrix& s);

/// True iff a and b are related by switching and/or simultaneous
/// row/column permutation. Returns false on order mismatch.
bool are_equivalent(const SeidelMatrix& a, const SeidelMatrix& b);

} // namespace seidel
