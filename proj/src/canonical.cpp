#include "seidel/canonical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace seidel {

std::string CanonicalForm::render() const {
    static const char* hex = "0123456789abcdef";
    std::string out = std::to_string(order_);
    out.push_back(':');
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
        int nib = 0;
        for (std::size_t b = 0; b < 4 && i + b < bits_.size(); ++b)
            if (bits_[i + b]) nib |= 8 >> b;
        out.push_back(hex[nib]);
    }
    return out;
}

SeidelMatrix normalize_at_vertex(const SeidelMatrix& s, int v) {
    const int n = s.order();
    if (v < 0 || v >= n) throw std::invalid_argument("normalize_at_vertex: index out of range");
    std::vector<std::int8_t> d(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)] = (j == v) ? 1 : static_cast<std::int8_t>(s.at(v, j));
    return apply_switching(s, SwitchingVector::from_signs(std::move(d)));
}

namespace {

// Lexicographically least adjacency bit-string over all labelings, bits in
// incremental pair order (0,1),(0,2),(1,2),(0,3),... Backtracking with
// degree-sequence restriction (labelings take degrees in sorted order) and
// prefix pruning against the best string found so far.
class Labeler {
public:
    Labeler(int m, const std::vector<std::uint8_t>& adj) : m_(m), adj_(adj) {
        deg_.assign(m_, 0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) deg_[i] += adj_[static_cast<std::size_t>(i) * m_ + j];
    }

    std::vector<std::uint8_t> run() {
        if (m_ == 0) return {};
        used_.assign(m_, 0);
        perm_.clear();
        cur_.clear();
        have_best_ = false;
        rec(true);
        return best_;
    }

private:
    // Invariant: tight means cur_ equals the prefix of best_; otherwise cur_
    // is strictly smaller at the first differing position. Returns whether
    // best_ was replaced somewhere in this subtree (which restores tightness
    // for the remaining siblings, since the new best extends cur_).
    bool rec(bool tight) {
        const int t = static_cast<int>(perm_.size());
        if (t == m_) {
            if (!have_best_ || !tight) {
                best_ = cur_;
                have_best_ = true;
                return true;
            }
            return false;
        }
        bool any_update = false;
        int min_deg = std::numeric_limits<int>::max();
        for (int u = 0; u < m_; ++u)
            if (!used_[u]) min_deg = std::min(min_deg, deg_[u]);
        for (int u = 0; u < m_; ++u) {
            if (used_[u] || deg_[u] != min_deg) continue;
            const std::size_t base = cur_.size();
            for (int i = 0; i < t; ++i)
                cur_.push_back(adj_[static_cast<std::size_t>(perm_[i]) * m_ + u]);
            bool child_tight = tight;
            bool prune = false;
            if (have_best_ && tight) {
                for (std::size_t i = base; i < cur_.size(); ++i) {
                    if (cur_[i] < best_[i]) {
                        child_tight = false;
                        break;
                    }
                    if (cur_[i] > best_[i]) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) {
                used_[u] = 1;
                perm_.push_back(u);
                if (rec(child_tight)) {
                    any_update = true;
                    tight = true;
                }
                perm_.pop_back();
                used_[u] = 0;
            }
            cur_.resize(base);
        }
        return any_update;
    }

    int m_;
    const std::vector<std::uint8_t>& adj_;
    std::vector<int> deg_;
    std::vector<char> used_;
    std::vector<int> perm_;
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> best_;
    bool have_best_ = false;
};

} // namespace

CanonicalForm canonical_form(const SeidelMatrix& s) {
    const int n = s.order();
    if (n == 1) return CanonicalForm(1, {});
    std::vector<std::uint8_t> best;
    bool have = false;
    for (int v = 0; v < n; ++v) {
        const SeidelMatrix t = normalize_at_vertex(s, v);
        // Residual graph on the n-1 vertices other than v; -1 is an edge.
        const int m = n - 1;
        std::vector<int> verts;
        verts.reserve(m);
        for (int i = 0; i < n; ++i)
            if (i != v) verts.push_back(i);
        std::vector<std::uint8_t> adj(static_cast<std::size_t>(m) * m, 0);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && t.at(verts[a], verts[b]) == -1)
                    adj[static_cast<std::size_t>(a) * m + b] = 1;
        std::vector<std::uint8_t> bits = Labeler(m, adj).run();
        if (!have || bits < best) {
            best = std::move(bits);
            have = true;
        }
    }
    return CanonicalForm(n, std::move(best));
}

bool are_equivalent(const SeidelMatrix& a, const SeidelMatrix& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace seidel
