#include "seidel/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace seidel {

SeidelMatrix SeidelMatrix::from_entries(int n, std::vector<std::int8_t> entries) {
    if (n < 1) throw std::invalid_argument("SeidelMatrix: order must be >= 1");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("SeidelMatrix: entry count does not match order");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int v = entries[static_cast<std::size_t>(i) * n + j];
            if (i == j) {
                if (v != 0)
                    throw std::invalid_argument("SeidelMatrix: nonzero diagonal at (" +
                                                std::to_string(i) + "," + std::to_string(i) + ")");
            } else if (v != 1 && v != -1) {
                throw std::invalid_argument("SeidelMatrix: off-diagonal entry not +-1 at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (v != entries[static_cast<std::size_t>(j) * n + i])
                throw std::invalid_argument("SeidelMatrix: asymmetry at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
        }
    }
    return SeidelMatrix(n, std::move(entries));
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SimpleGraph: order must be >= 1");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void SimpleGraph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
        throw std::invalid_argument("SimpleGraph: bad edge");
    adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
}

SwitchingVector SwitchingVector::from_signs(std::vector<std::int8_t> signs) {
    if (signs.empty()) throw std::invalid_argument("SwitchingVector: empty");
    for (const auto v : signs)
        if (v != 1 && v != -1)
            throw std::invalid_argument("SwitchingVector: entry not +-1");
    return SwitchingVector(std::move(signs));
}

SeidelMatrix seidel_from_graph(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) e[static_cast<std::size_t>(i) * n + j] = g.has_edge(i, j) ? -1 : 1;
    return SeidelMatrix::from_entries(n, std::move(e));
}

SimpleGraph graph_from_seidel(const SeidelMatrix& s) {
    const int n = s.order();
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.at(i, j) == -1) g.add_edge(i, j);
    return g;
}

SeidelMatrix apply_switching(const SeidelMatrix& s, const SwitchingVector& d) {
    const int n = s.order();
    if (d.size() != n)
        throw std::invalid_argument("apply_switching: switching vector length " +
                                    std::to_string(d.size()) + " != order " + std::to_string(n));
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::int8_t>(d.sign(i) * s.at(i, j) * d.sign(j));
    return SeidelMatrix::from_entries(n, std::move(e));
}

SeidelMatrix principal_submatrix(const SeidelMatrix& s, std::span<const int> keep) {
    if (keep.empty()) throw std::invalid_argument("principal_submatrix: empty index set");
    const int n = s.order();
    for (std::size_t a = 0; a < keep.size(); ++a) {
        if (keep[a] < 0 || keep[a] >= n)
            throw std::invalid_argument("principal_submatrix: index " + std::to_string(keep[a]) +
                                        " out of range for order " + std::to_string(n));
        if (a > 0 && keep[a] <= keep[a - 1])
            throw std::invalid_argument("principal_submatrix: indices must be strictly increasing");
    }
    const int m = static_cast<int>(keep.size());
    std::vector<std::int8_t> e(static_cast<std::size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            e[static_cast<std::size_t>(a) * m + b] = static_cast<std::int8_t>(s.at(keep[a], keep[b]));
    return SeidelMatrix::from_entries(m, std::move(e));
}

SeidelMatrix permute(const SeidelMatrix& s, std::span<const int> perm) {
    const int n = s.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permute: permutation length mismatch");
    std::vector<char> seen(n, 0);
    for (const int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("permute: not a permutation");
        seen[p] = 1;
    }
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(i) * n + j] = static_cast<std::int8_t>(s.at(perm[i], perm[j]));
    return SeidelMatrix::from_entries(n, std::move(e));
}

SeidelMatrix parse_matrix(std::string_view text) {
    // Split into newline-terminated lines; a missing trailing newline is an error.
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos)
            throw ParseError("parse_matrix: missing trailing newline", -1, -1);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw ParseError("parse_matrix: empty input", -1, -1);

    int n = 0;
    const auto& hdr = lines[0];
    const auto [ptr, ec] = std::from_chars(hdr.data(), hdr.data() + hdr.size(), n);
    if (ec != std::errc() || ptr != hdr.data() + hdr.size() || n < 1)
        throw ParseError("parse_matrix: line 1 is not a positive decimal order", -1, -1);
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("parse_matrix: expected " + std::to_string(n) + " matrix lines, got " +
                             std::to_string(lines.size() - 1),
                         -1, -1);

    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& row = lines[static_cast<std::size_t>(i) + 1];
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError("parse_matrix: row " + std::to_string(i) + " has length " +
                                 std::to_string(row.size()) + ", expected " + std::to_string(n),
                             i, -1);
        for (int j = 0; j < n; ++j) {
            std::int8_t v;
            switch (row[static_cast<std::size_t>(j)]) {
                case '0': v = 0; break;
                case '+': v = 1; break;
                case '-': v = -1; break;
                default:
                    throw ParseError("parse_matrix: invalid character '" +
                                         std::string(1, row[static_cast<std::size_t>(j)]) +
                                         "' at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                                     i, j);
            }
            e[static_cast<std::size_t>(i) * n + j] = v;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (e[static_cast<std::size_t>(i) * n + i] != 0)
            throw ParseError("parse_matrix: nonzero diagonal at (" + std::to_string(i) + "," +
                                 std::to_string(i) + ")",
                             i, i);
        for (int j = i + 1; j < n; ++j) {
            if (e[static_cast<std::size_t>(i) * n + j] == 0)
                throw ParseError("parse_matrix: zero off-diagonal entry at (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")",
                                 i, j);
            if (e[static_cast<std::size_t>(i) * n + j] != e[static_cast<std::size_t>(j) * n + i])
                throw ParseError("parse_matrix: asymmetry at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")/(" + std::to_string(j) + "," +
                                     std::to_string(i) + ")",
                                 i, j);
        }
    }
    return SeidelMatrix::from_entries(n, std::move(e));
}

std::string render_matrix(const SeidelMatrix& s) {
    const int n = s.order();
    std::string out = std::to_string(n);
    out.push_back('\n');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int v = s.at(i, j);
            out.push_back(v == 0 ? '0' : (v > 0 ? '+' : '-'));
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace seidel
