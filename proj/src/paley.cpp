#include "seidel/paley.hpp"

#include <cstdint>

namespace seidel {

ConferenceMatrix ConferenceMatrix::validate(SeidelMatrix s) {
    const int n = s.order();
    // Row inner products over int64; entries are in {-1,0,1} so no overflow
    // at any order this library targets.
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long long dot = 0;
            for (int k = 0; k < n; ++k) dot += static_cast<long long>(s.at(i, k)) * s.at(j, k);
            const long long want = (i == j) ? n - 1 : 0;
            if (dot != want) throw ConferenceError(i, j, dot);
        }
    }
    return ConferenceMatrix(std::move(s));
}

PrimeField PrimeField::of(std::uint32_t p) {
    if (p >= (1u << 20))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " exceeds cap 2^20");
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not an odd prime");
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    return PrimeField(p);
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

} // namespace

int quadratic_character(const PrimeField& f, std::uint32_t a) {
    const std::uint32_t p = f.p();
    if (a >= p) throw std::invalid_argument("quadratic_character: residue out of range");
    if (a == 0) return 0;
    const std::uint64_t e = pow_mod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

ConferenceMatrix paley_conference(const PrimeField& f) {
    const std::uint32_t p = f.p();
    if (p % 4 != 1)
        throw std::invalid_argument(
            "paley_conference: p = " + std::to_string(p) +
            " = 3 (mod 4); the Paley matrix would be skew-symmetric, not symmetric");
    const int n = static_cast<int>(p) + 1;
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    // Row/column 0 is the all +1 border; the core indexes field elements 0..p-1.
    for (int j = 1; j < n; ++j) {
        e[static_cast<std::size_t>(0) * n + j] = 1;
        e[static_cast<std::size_t>(j) * n + 0] = 1;
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (i == j) continue;
            const int q = static_cast<int>(p);
            const std::uint32_t diff = static_cast<std::uint32_t>(((i - j) % q + q) % q);
            e[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::int8_t>(quadratic_character(f, diff));
        }
    }
    return ConferenceMatrix::validate(SeidelMatrix::from_entries(n, std::move(e)));
}

} // namespace seidel
