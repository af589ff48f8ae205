// Command-line front end: Paley construction, exact spectrum reports,
// switching-equivalence tests, and principal-submatrix exploration.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input, 3 negative
// verdict (equiv only).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "seidel/canonical.hpp"
#include "seidel/charpoly.hpp"
#include "seidel/explore.hpp"
#include "seidel/paley.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotEquivalent = 3;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return buf.str();
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << data;
    out.flush();
    return static_cast<bool>(out);
}

std::string fmt_rat(const seidel::Rat& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

int load_matrix(const std::string& path, std::optional<seidel::SeidelMatrix>& out) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        return kExitIo;
    }
    try {
        out = seidel::parse_matrix(*text);
    } catch (const seidel::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int run_paley(std::uint32_t prime, const std::string& out_path) {
    std::optional<seidel::ConferenceMatrix> c;
    try {
        c = seidel::paley_conference(seidel::PrimeField::of(prime));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    if (!write_file(out_path, seidel::render_matrix(c->seidel()))) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitIo;
    }
    std::cout << "wrote order-" << c->order() << " conference matrix to " << out_path << "\n";
    return kExitOk;
}

int run_spectrum(const std::string& in_path, bool certify) {
    std::optional<seidel::SeidelMatrix> s;
    if (const int rc = load_matrix(in_path, s)) return rc;
    const seidel::CharPolynomial p = seidel::char_poly(*s);
    const seidel::SpectrumSummary sum = seidel::summarize_spectrum(p);
    std::cout << "order: " << s->order() << "\n"
              << "charpoly: " << p.render() << "\n"
              << "determinant: " << sum.det << "\n"
              << "symmetric: " << (sum.is_symmetric ? "true" : "false") << "\n"
              << "zero multiplicity: " << sum.zero_multiplicity << "\n";
    for (const auto& [lo, hi, cnt] : sum.interval_counts)
        std::cout << "roots in (" << fmt_rat(lo) << "," << fmt_rat(hi) << "]: " << cnt << "\n";
    if (certify)
        std::cout << "certified conference spectrum: "
                  << (seidel::certify_conference_spectrum(p, s->order()) ? "true" : "false")
                  << "\n";
    return kExitOk;
}

int run_equiv(const std::string& a_path, const std::string& b_path) {
    std::optional<seidel::SeidelMatrix> a, b;
    if (const int rc = load_matrix(a_path, a)) return rc;
    if (const int rc = load_matrix(b_path, b)) return rc;
    if (a->order() != b->order()) {
        std::cerr << "error: order mismatch (" << a->order() << " vs " << b->order() << ")\n";
        return kExitInvalid;
    }
    if (seidel::are_equivalent(*a, *b)) {
        std::cout << "equivalent\n";
        return kExitOk;
    }
    std::cout << "not equivalent\n";
    return kExitNotEquivalent;
}

struct ExploreArgs {
    std::string in_path;
    std::string out_path;
    int k = 0;
    std::uint64_t sample = 0; // 0 = exhaustive
    std::uint64_t seed = 1;
    bool dedupe = false;
    bool allow_noncc = false;
    bool force = false;
    std::uint64_t cap = 10'000'000;
    int threads = 0;
};

int run_explore(const ExploreArgs& args) {
    std::optional<seidel::SeidelMatrix> s;
    if (const int rc = load_matrix(args.in_path, s)) return rc;
    if (!args.allow_noncc) {
        try {
            seidel::ConferenceMatrix::validate(*s);
        } catch (const seidel::ConferenceError& e) {
            std::cerr << "error: " << args.in_path << ": " << e.what()
                      << " (use --allow-noncc to explore anyway)\n";
            return kExitInvalid;
        }
    }
    seidel::ExplorationTask task(*s);
    task.k = args.k;
    if (args.sample > 0) task.sample = seidel::SampleMode{args.sample, args.seed};
    task.dedupe = args.dedupe;
    task.cap = args.force ? std::numeric_limits<std::uint64_t>::max() : args.cap;
    task.threads = args.threads;

    std::optional<seidel::ExplorationReport> report;
    try {
        report = seidel::explore(task);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    std::ostringstream csv;
    seidel::write_report_csv(csv, *report);
    if (!write_file(args.out_path, csv.str())) {
        std::cerr << "error: cannot write " << args.out_path << "\n";
        return kExitIo;
    }
    std::cout << seidel::summary_block(*report) << "report: " << args.out_path << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conference and Seidel matrix toolkit: exact spectra, switching "
                 "equivalence, and principal-submatrix exploration"};
    app.require_subcommand(1);

    std::uint32_t prime = 0;
    std::string paley_out;
    auto* paley = app.add_subcommand("paley", "Construct a Paley conference matrix");
    paley->add_option("--prime", prime, "Odd prime p with p = 1 (mod 4)")->required();
    paley->add_option("--out", paley_out, "Output matrix file")->required();

    std::string spec_in;
    bool certify = false;
    auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum report for a Seidel matrix");
    spectrum->add_option("--in", spec_in, "Input matrix file")->required();
    spectrum->add_flag("--certify-conference", certify,
                       "Check the polynomial equals (x^2-(n-1))^(n/2)");

    std::string equiv_a, equiv_b;
    auto* equiv = app.add_subcommand("equiv", "Test switching-equivalence of two matrices");
    equiv->add_option("--a", equiv_a, "First matrix file")->required();
    equiv->add_option("--b", equiv_b, "Second matrix file")->required();

    ExploreArgs ex;
    auto* explore = app.add_subcommand("explore", "Classify principal submatrices by symmetry");
    explore->add_option("--in", ex.in_path, "Input matrix file")->required();
    explore->add_option("--k", ex.k, "Submatrix order")->required();
    explore->add_option("--out", ex.out_path, "Output CSV report")->required();
    explore->add_option("--sample", ex.sample, "Sample this many subsets instead of enumerating");
    explore->add_option("--seed", ex.seed, "Sampling seed (default 1)");
    explore->add_flag("--dedupe", ex.dedupe, "Deduplicate by switching-isomorphism class");
    explore->add_flag("--allow-noncc", ex.allow_noncc, "Skip conference-matrix validation");
    explore->add_flag("--force", ex.force, "Ignore the subset-count cap");
    explore->add_option("--cap", ex.cap, "Exhaustive subset cap (default 10^7)");
    explore->add_option("--threads", ex.threads, "Worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    if (paley->parsed()) return run_paley(prime, paley_out);
    if (spectrum->parsed()) return run_spectrum(spec_in, certify);
    if (equiv->parsed()) return run_equiv(equiv_a, equiv_b);
    if (explore->parsed()) return run_explore(ex);
    return kExitInvalid;
}
