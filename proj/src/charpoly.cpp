#include "seidel/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace seidel {

CharPolynomial CharPolynomial::from_coeffs(std::vector<Int> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("CharPolynomial: empty coefficient vector");
    const std::size_t n = coeffs.size() - 1;
    if (coeffs[n] != 1) throw std::invalid_argument("CharPolynomial: not monic");
    if (n >= 1 && coeffs[n - 1] != 0)
        throw std::invalid_argument("CharPolynomial: trace coefficient is nonzero");
    return CharPolynomial(std::move(coeffs));
}

std::string CharPolynomial::render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ' ';
        out << coeffs_[i];
    }
    return out.str();
}

CharPolynomial char_poly(const SeidelMatrix& s) {
    const int n = s.order();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[n] = 1;

    // Faddeev-LeVerrier: M_0 = I; M_k = A M_{k-1} + c_{n-k+1} I,
    // c_{n-k} = -tr(A M_{k-1} ... ) / k, all divisions exact.
    std::vector<Int> m(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;

    std::vector<Int> am(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        // am = A * m; A has entries in {-1,0,1} so the product is add/sub only.
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int t = 0; t < n; ++t) {
                    const int a = s.at(i, t);
                    if (a == 1)
                        acc += m[static_cast<std::size_t>(t) * n + j];
                    else if (a == -1)
                        acc -= m[static_cast<std::size_t>(t) * n + j];
                }
                am[static_cast<std::size_t>(i) * n + j] = std::move(acc);
            }
        }
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += am[static_cast<std::size_t>(i) * n + i];
        if (tr % k != 0)
            throw std::logic_error("char_poly: inexact division in Faddeev-LeVerrier");
        c[static_cast<std::size_t>(n - k)] = -tr / k;
        if (k < n) {
            m = am;
            for (int i = 0; i < n; ++i)
                m[static_cast<std::size_t>(i) * n + i] += c[static_cast<std::size_t>(n - k)];
        }
    }
    return CharPolynomial::from_coeffs(std::move(c));
}

bool is_symmetric_spectrum(const CharPolynomial& p) {
    const int n = p.degree();
    for (int i = 0; i <= n; ++i)
        if ((i & 1) != (n & 1) && p.coeffs()[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

Int determinant(const CharPolynomial& p) {
    const Int& c0 = p.coeffs()[0];
    return (p.degree() % 2 == 0) ? c0 : -c0;
}

int count_roots_in_interval(const CharPolynomial& p, const Rat& lo, const Rat& hi) {
    return poly::count_distinct_roots(poly::to_rational(p.coeffs()), lo, hi);
}

bool certify_conference_spectrum(const CharPolynomial& p, int n) {
    if (n % 2 != 0 || p.degree() != n) return false;
    const IntPoly target = poly::pow(IntPoly{Int(1 - n), Int(0), Int(1)}, static_cast<unsigned>(n / 2));
    return target == p.coeffs();
}

int zero_eigenvalue_multiplicity(const CharPolynomial& p) {
    int k = 0;
    while (k < p.degree() && p.coeffs()[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

SpectrumSummary summarize_spectrum(const CharPolynomial& p) {
    SpectrumSummary out;
    out.is_symmetric = is_symmetric_spectrum(p);
    out.det = determinant(p);
    out.zero_multiplicity = zero_eigenvalue_multiplicity(p);
    // Cauchy bound: every root is below 1 + max |c_i| (monic). Entries are
    // +-1 so the order itself also bounds the spectral radius; take the order.
    const int bound = p.degree();
    for (int lo = -bound - 1; lo <= bound - 1; ++lo) {
        const Rat a(lo), b(lo + 1);
        const int cnt = count_roots_in_interval(p, a, b);
        if (cnt > 0) out.interval_counts.emplace_back(a, b, cnt);
    }
    return out;
}

} // namespace seidel
