#include "seidel/explore.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace seidel {

std::uint64_t Xorshift64Star::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: zero bound");
    // Reject the tail so the distribution is exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    const std::uint64_t cap = 1ULL << 63;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is always exact at this point.
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > cap / num) throw std::overflow_error("binomial: value exceeds 2^63");
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t subset_rank_colex(const std::vector<int>& subset) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        r += binomial(subset[i], static_cast<int>(i) + 1);
    return r;
}

std::vector<int> subset_unrank_colex(int n, int k, std::uint64_t rank) {
    std::vector<int> out(static_cast<std::size_t>(k));
    int hi = n;
    for (int i = k; i >= 1; --i) {
        int s = hi - 1;
        while (s >= i && binomial(s, i) > rank) --s;
        out[static_cast<std::size_t>(i) - 1] = s;
        rank -= binomial(s, i);
        hi = s;
    }
    return out;
}

namespace {

// Advance a strictly increasing subset to its colex successor.
void next_subset_colex(std::vector<int>& s, int /*n*/) {
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        if (i + 1 == k || s[i] + 1 < s[i + 1]) {
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j;
            return;
        }
    }
}

SubsetRecord make_record(const SeidelMatrix& source, const std::vector<int>& indices,
                         bool dedupe) {
    SeidelMatrix sub = principal_submatrix(source, indices);
    CharPolynomial p = char_poly(sub);
    const bool sym = is_symmetric_spectrum(p);
    std::optional<CanonicalForm> canon;
    if (dedupe) canon = canonical_form(sub);
    return SubsetRecord{indices, sym, std::move(p), std::move(canon)};
}

} // namespace

ExplorationReport explore(const ExplorationTask& task) {
    const int n = task.source.order();
    const int k = task.k;
    if (k < 1 || k > n)
        throw std::invalid_argument("explore: k = " + std::to_string(k) +
                                    " out of range for order " + std::to_string(n));

    // Ranks to visit, ascending; colex order for exhaustive runs.
    std::vector<std::uint64_t> ranks;
    const std::uint64_t total = binomial(n, k);
    if (task.sample) {
        const std::uint64_t count = task.sample->count;
        if (count < 1) throw std::invalid_argument("explore: sample count must be >= 1");
        if (count > total)
            throw std::invalid_argument("explore: sample count " + std::to_string(count) +
                                        " exceeds subset count " + std::to_string(total));
        Xorshift64Star rng(task.sample->seed);
        std::set<std::uint64_t> chosen;
        while (chosen.size() < count) chosen.insert(rng.next_below(total));
        ranks.assign(chosen.begin(), chosen.end());
    } else {
        if (total > task.cap)
            throw std::runtime_error("explore: C(" + std::to_string(n) + "," + std::to_string(k) +
                                     ") = " + std::to_string(total) + " exceeds cap " +
                                     std::to_string(task.cap));
        ranks.resize(total);
        for (std::uint64_t r = 0; r < total; ++r) ranks[r] = r;
    }

    // Contiguous ranges per worker, merged in range order; output is
    // independent of the thread count.
    const std::uint64_t m = ranks.size();
    unsigned threads = task.threads > 0 ? static_cast<unsigned>(task.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, m));
    std::vector<std::vector<SubsetRecord>> parts(threads);
    auto worker = [&](unsigned w) {
        const std::uint64_t lo = m * w / threads;
        const std::uint64_t hi = m * (w + 1) / threads;
        auto& out = parts[w];
        out.reserve(hi - lo);
        std::vector<int> subset;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            if (idx == lo || ranks[idx] != ranks[idx - 1] + 1)
                subset = subset_unrank_colex(n, k, ranks[idx]);
            else
                next_subset_colex(subset, n);
            out.push_back(make_record(task.source, subset, task.dedupe));
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    ExplorationReport report;
    report.source_order = n;
    report.k = k;
    report.sampled = task.sample.has_value();
    report.dedupe = task.dedupe;
    std::set<CanonicalForm> classes;
    for (auto& part : parts) {
        for (auto& rec : part) {
            ++report.examined;
            if (rec.symmetric)
                ++report.symmetric_count;
            else
                ++report.asymmetric_count;
            if (rec.canonical) classes.insert(*rec.canonical);
            report.records.push_back(std::move(rec));
        }
    }
    report.distinct_classes = classes.size();
    return report;
}

std::vector<OrderSummaryRow> classify_orders(const ConferenceMatrix& source, std::uint64_t cap,
                                             std::uint64_t sample_count, std::uint64_t seed,
                                             bool dedupe) {
    const int n = source.order();
    std::vector<OrderSummaryRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        ExplorationTask task(source);
        task.k = k;
        task.cap = cap;
        task.dedupe = dedupe;
        const std::uint64_t total = binomial(n, k);
        if (total > cap) task.sample = SampleMode{std::min(sample_count, total), seed};
        const ExplorationReport rep = explore(task);
        rows.push_back({k, rep.sampled, rep.examined, rep.symmetric_count, rep.asymmetric_count,
                        rep.distinct_classes});
    }
    return rows;
}

void write_report_csv(std::ostream& out, const ExplorationReport& report) {
    out << "indices,k,symmetric,charpoly,canonical_key\n";
    for (const auto& rec : report.records) {
        for (std::size_t i = 0; i < rec.indices.size(); ++i) {
            if (i) out << '-';
            out << rec.indices[i];
        }
        out << ',' << report.k << ',' << (rec.symmetric ? "true" : "false") << ',';
        std::string poly = rec.charpoly.render();
        std::replace(poly.begin(), poly.end(), ' ', ';');
        out << poly << ',';
        if (rec.canonical) out << rec.canonical->render();
        out << '\n';
    }
}

std::string summary_block(const ExplorationReport& report) {
    std::ostringstream out;
    out << "source order: " << report.source_order << '\n'
        << "k: " << report.k << '\n'
        << "mode: " << (report.sampled ? "sample" : "exhaustive") << '\n'
        << "examined: " << report.examined << '\n'
        << "symmetric: " << report.symmetric_count << '/' << report.examined << " symmetric\n"
        << "asymmetric: " << report.asymmetric_count << '\n';
    if (report.dedupe) out << "distinct classes: " << report.distinct_classes << '\n';
    return out.str();
}

} // namespace seidel
