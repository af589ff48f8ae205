#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "seidel/canonical.hpp"
#include "seidel/charpoly.hpp"
#include "seidel/conference.hpp"

namespace seidel {

/// xorshift64* generator; fixed algorithm so sampled subsets are portable
/// across implementations. A zero seed is remapped to a fixed constant.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    /// Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// C(n, k); throws std::overflow_error if the value exceeds 2^63.
std::uint64_t binomial(int n, int k);

/// Colexicographic subset rank/unrank over k-subsets of {0..n-1}.
std::uint64_t subset_rank_colex(const std::vector<int>& subset);
std::vector<int> subset_unrank_colex(int n, int k, std::uint64_t rank);

struct SampleMode {
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
};

struct ExplorationTask {
    SeidelMatrix source;
    int k = 0;
    /// Absent: exhaustive over all C(n,k) subsets (subject to cap).
    std::optional<SampleMode> sample;
    bool dedupe = false;
    std::uint64_t cap = 10'000'000;
    /// 0 = hardware concurrency. Thread count never affects the report.
    int threads = 0;

    explicit ExplorationTask(const ConferenceMatrix& c) : source(c.seidel()) {}
    explicit ExplorationTask(SeidelMatrix s) : source(std::move(s)) {}
};

struct SubsetRecord {
    std::vector<int> indices;
    bool symmetric = false;
    CharPolynomial charpoly;
    std::optional<CanonicalForm> canonical; // present when dedupe is on
};

struct ExplorationReport {
    int source_order = 0;
    int k = 0;
    bool sampled = false;
    std::uint64_t examined = 0;
    std::uint64_t symmetric_count = 0;
    std::uint64_t asymmetric_count = 0;
    std::uint64_t distinct_classes = 0; // 0 when dedupe is off
    bool dedupe = false;
    std::vector<SubsetRecord> records;
};

/// Classify the selected principal submatrices by spectral symmetry.
/// Exhaustive mode enumerates in colexicographic order; sampling draws
/// subsets uniformly without replacement from the seed. Deterministic:
/// identical tasks produce identical reports regardless of thread count.
/// Throws std::invalid_argument on bad k or sample count, and
/// std::runtime_error when C(n,k) exceeds the cap in exhaustive mode.
ExplorationReport explore(const ExplorationTask& task);

struct OrderSummaryRow {
    int k = 0;
    bool sampled = false;
    std::uint64_t examined = 0;
    std::uint64_t symmetric_count = 0;
    std::uint64_t asymmetric_count = 0;
    std::uint64_t distinct_classes = 0;
};

/// Per-k table over k = 1..n. Rows with C(n,k) <= cap are exhaustive;
/// larger ones are sampled with the given count and seed.
std::vector<OrderSummaryRow> classify_orders(const ConferenceMatrix& source,
                                             std::uint64_t cap = 10'000'000,
                                             std::uint64_t sample_count = 1000,
                                             std::uint64_t seed = 1,
                                             bool dedupe = false);

/// CSV report: header `indices,k,symmetric,charpoly,canonical_key`;
/// indices hyphen-joined; charpoly coefficients degree 0 upward joined by
/// semicolons; canonical_key empty when dedupe is off.
void write_report_csv(std::ostream& out, const ExplorationReport& report);

/// Human-readable summary block for stdout.
std::string summary_block(const ExplorationReport& report);

} // namespace seidel
