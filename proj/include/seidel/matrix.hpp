#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seidel {

/// Raised when text input fails to parse as a Seidel matrix.
/// row/col are 0-based entry coordinates, or -1 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int row, int col)
        : std::runtime_error(std::move(msg)), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

/// Symmetric integer matrix with zero diagonal and +-1 off-diagonal.
/// Immutable after construction; validity is enforced by the factory.
class SeidelMatrix {
public:
    /// entries is row-major, length n*n. Throws std::invalid_argument on
    /// any invariant violation (diagonal, symmetry, entry range).
    static SeidelMatrix from_entries(int n, std::vector<std::int8_t> entries);

    int order() const { return n_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const SeidelMatrix&) const = default;

private:
    SeidelMatrix(int n, std::vector<std::int8_t> entries)
        : n_(n), entries_(std::move(entries)) {}

    int n_;
    std::vector<std::int8_t> entries_;
};

/// Undirected simple graph on vertices 0..n-1.
class SimpleGraph {
public:
    explicit SimpleGraph(int n);

    int order() const { return n_; }
    bool has_edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    void add_edge(int i, int j);

    bool operator==(const SimpleGraph&) const = default;

private:
    int n_;
    std::vector<std::uint8_t> adj_;
};

/// Diagonal +-1 switching pattern.
class SwitchingVector {
public:
    /// Throws std::invalid_argument unless every entry is -1 or +1.
    static SwitchingVector from_signs(std::vector<std::int8_t> signs);

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(int i) const { return signs_[static_cast<std::size_t>(i)]; }

private:
    explicit SwitchingVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {}
    std::vector<std::int8_t> signs_;
};

/// -1 encodes adjacency, +1 non-adjacency, 0 on the diagonal.
SeidelMatrix seidel_from_graph(const SimpleGraph& g);
SimpleGraph graph_from_seidel(const SeidelMatrix& s);

/// result[i][j] = d[i] * s[i][j] * d[j]. Throws std::invalid_argument on
/// dimension mismatch (a caller bug, not a data condition).
SeidelMatrix apply_switching(const SeidelMatrix& s, const SwitchingVector& d);

/// keep must be nonempty, strictly increasing, all indices within range.
SeidelMatrix principal_submatrix(const SeidelMatrix& s, std::span<const int> keep);

/// result[i][j] = s[perm[i]][perm[j]]; perm must be a permutation of 0..n-1.
SeidelMatrix permute(const SeidelMatrix& s, std::span<const int> perm);

/// Matrix file format: line 1 is the decimal order n; then n lines of
/// exactly n characters from {0,+,-}; trailing newline required.
SeidelMatrix parse_matrix(std::string_view text);
std::string render_matrix(const SeidelMatrix& s);

} // namespace seidel
