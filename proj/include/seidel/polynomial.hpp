#pragma once

#include <vector>

#include "seidel/bigint.hpp"

namespace seidel {

// Dense polynomials, coefficient of x^i at index i. The zero polynomial is
// the empty vector; nonzero polynomials have a nonzero leading coefficient.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

namespace poly {

IntPoly trim(IntPoly p);
int degree(const IntPoly& p); // -1 for the zero polynomial
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& base, unsigned exp);
IntPoly derivative(const IntPoly& p);
Int eval(const IntPoly& p, const Int& x);

RatPoly to_rational(const IntPoly& p);
RatPoly trim(RatPoly p);
int degree(const RatPoly& p);
Rat eval(const RatPoly& p, const Rat& x);
RatPoly derivative(const RatPoly& p);
/// Remainder of a by b (b nonzero), exact over rationals.
RatPoly rem(const RatPoly& a, const RatPoly& b);
/// Monic gcd over rationals; gcd(0,0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// p / gcd(p, p'), made monic. Distinct roots, each with multiplicity 1.
RatPoly squarefree_part(const RatPoly& p);

/// Yun decomposition: list of (monic factor, multiplicity) with distinct
/// squarefree factors, product of factor^multiplicity equal to p up to a
/// constant. Empty for constants.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by a Sturm chain on the squarefree part.
int count_distinct_roots(const RatPoly& p, const Rat& lo, const Rat& hi);

} // namespace poly

} // namespace seidel
