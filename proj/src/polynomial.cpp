#include "seidel/polynomial.hpp"

#include <stdexcept>

namespace seidel::poly {

IntPoly trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

IntPoly pow(const IntPoly& base, unsigned exp) {
    IntPoly r{Int(1)};
    IntPoly b = base;
    while (exp) {
        if (exp & 1) r = mul(r, b);
        b = mul(b, b);
        exp >>= 1;
    }
    return r;
}

IntPoly derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Int(static_cast<long>(i));
    return trim(std::move(r));
}

Int eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RatPoly to_rational(const IntPoly& p) {
    RatPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    return r;
}

RatPoly trim(RatPoly p) {
    while (!p.empty() && p.back().numerator() == 0) p.pop_back();
    return p;
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat eval(const RatPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(static_cast<long>(i)));
    return trim(std::move(r));
}

RatPoly rem(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) throw std::invalid_argument("poly::rem: division by zero polynomial");
    RatPoly r = a;
    const int db = degree(b);
    while (degree(r) >= db) {
        const Rat q = r.back() / b.back();
        const std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= q * b[i];
        r.pop_back();
        r = trim(std::move(r));
    }
    return r;
}

namespace {

RatPoly make_monic(RatPoly p) {
    if (p.empty()) return p;
    const Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

RatPoly quotient_exact(const RatPoly& a, const RatPoly& b) {
    // a must be divisible by b.
    RatPoly r = a;
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    const int db = degree(b);
    while (degree(r) >= db && !r.empty()) {
        const Rat c = r.back() / b.back();
        const std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        r = trim(std::move(r));
    }
    if (!r.empty()) throw std::logic_error("poly::quotient_exact: remainder is nonzero");
    return trim(std::move(q));
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

} // namespace

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = trim(a), y = trim(b);
    while (!y.empty()) {
        RatPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(std::move(x));
}

RatPoly squarefree_part(const RatPoly& p) {
    const RatPoly q = trim(p);
    if (degree(q) <= 0) return make_monic(q);
    const RatPoly g = gcd(q, derivative(q));
    return make_monic(quotient_exact(q, g));
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = make_monic(trim(p));
    if (degree(f) <= 0) return out;
    // Yun's algorithm.
    RatPoly fp = derivative(f);
    RatPoly a = gcd(f, fp);
    RatPoly b = quotient_exact(f, a);
    RatPoly c = quotient_exact(fp, a);
    RatPoly d = sub(c, derivative(b));
    int i = 1;
    while (degree(b) > 0) {
        RatPoly g = gcd(b, d);
        if (degree(g) > 0) out.emplace_back(g, i);
        b = quotient_exact(b, g);
        c = quotient_exact(d, g);
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

namespace {

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int prev = 0, var = 0;
    for (const auto& q : chain) {
        const int s = sign_of(eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

} // namespace

int count_distinct_roots(const RatPoly& p, const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw std::invalid_argument("count_distinct_roots: lo must be < hi");
    const RatPoly sf = squarefree_part(p);
    if (degree(sf) <= 0) return 0;
    std::vector<RatPoly> chain{sf, derivative(sf)};
    while (!chain.back().empty()) {
        RatPoly r = rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    // With zero signs skipped, V(lo) - V(hi) counts distinct roots in (lo, hi].
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

} // namespace seidel::poly
