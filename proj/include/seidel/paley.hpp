#pragma once

#include <cstdint>

#include "seidel/conference.hpp"

namespace seidel {

/// Prime field Z/pZ for odd prime p. Primality is checked by trial
/// division at construction; p is capped at 2^20.
class PrimeField {
public:
    /// Throws std::invalid_argument if p is not an odd prime or exceeds the cap.
    static PrimeField of(std::uint32_t p);

    std::uint32_t p() const { return p_; }

private:
    explicit PrimeField(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Legendre symbol via Euler's criterion: 0 if a = 0, +1 if a is a
/// nonzero square mod p, -1 otherwise. Requires 0 <= a < p.
int quadratic_character(const PrimeField& f, std::uint32_t a);

/// Symmetric conference matrix of order p+1 from the quadratic-residue
/// construction. Core block entry (i,j) is chi(i-j); the first row and
/// column are all +1 off-diagonal. Requires p = 1 (mod 4); for
/// p = 3 (mod 4) the construction is skew-symmetric and an error is raised.
ConferenceMatrix paley_conference(const PrimeField& f);

} // namespace seidel
