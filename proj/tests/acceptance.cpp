// Acceptance suite: one pass/fail line per criterion, exit code is the
// number of failures. Criterion 10 execs the CLI binary; pass its path as
// argv[1] (ctest does).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seidel/canonical.hpp"
#include "seidel/charpoly.hpp"
#include "seidel/explore.hpp"
#include "seidel/paley.hpp"

using namespace seidel;

namespace {

const std::vector<std::uint32_t> kPrimes{5, 13, 17, 29};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (!ok) ++failures;
    std::cout << "criterion " << id << " [" << name << "]: " << (ok ? "PASS" : "FAIL") << note
              << " (" << ms << " ms)\n";
}

std::vector<int> drop_index(int n, int drop) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (i != drop) keep.push_back(i);
    return keep;
}

bool conference_product_ok(const SeidelMatrix& s) {
    const int n = s.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long dot = 0;
            for (int k = 0; k < n; ++k) dot += static_cast<long long>(s.at(i, k)) * s.at(j, k);
            if (dot != (i == j ? n - 1 : 0)) return false;
        }
    return true;
}

IntPoly conference_poly(int n) {
    return poly::pow(IntPoly{Int(1 - n), Int(0), Int(1)}, static_cast<unsigned>(n / 2));
}

IntPoly deleted_point_poly(int n) {
    return poly::mul(IntPoly{Int(0), Int(1)},
                     poly::pow(IntPoly{Int(1 - n), Int(0), Int(1)}, static_cast<unsigned>((n - 2) / 2)));
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "Paley construction validates exactly", [] {
        for (const auto p : kPrimes) {
            const auto c = paley_conference(PrimeField::of(p));
            if (c.order() != static_cast<int>(p) + 1) return false;
            if (!conference_product_ok(c.seidel())) return false;
        }
        return true;
    });

    criterion(2, "conference char poly is (x^2-(n-1))^(n/2)", [] {
        for (const auto p : kPrimes) {
            const auto c = paley_conference(PrimeField::of(p));
            const auto cp = char_poly(c.seidel());
            if (cp.coeffs() != conference_poly(c.order())) return false;
            if (!certify_conference_spectrum(cp, c.order())) return false;
        }
        return true;
    });

    criterion(3, "one-point-deleted submatrices: x(x^2-(n-1))^((n-2)/2)", [] {
        for (const auto p : kPrimes) {
            const auto c = paley_conference(PrimeField::of(p));
            const int n = c.order();
            const IntPoly want = deleted_point_poly(n);
            for (int drop = 0; drop < n; ++drop) {
                const auto m = principal_submatrix(c.seidel(), drop_index(n, drop));
                if (char_poly(m).coeffs() != want) return false;
            }
        }
        return true;
    });

    criterion(4, "no symmetric spectrum at order 3", [] {
        for (const auto& s : oracle::all_seidel_matrices(3))
            if (is_symmetric_spectrum(char_poly(s))) return false;
        ExplorationTask task(paley_conference(PrimeField::of(5)));
        task.k = 3;
        const auto r = explore(task);
        return r.examined == 20 && r.symmetric_count == 0;
    });

    criterion(5, "nonsingular at orders 2,3,4,6", [] {
        for (const int n : {2, 3, 4, 6})
            for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)); ++mask)
                if (determinant(char_poly(oracle::seidel_from_mask(n, mask))) == 0) return false;
        return true;
    });

    criterion(6, "symmetric-spectrum matrices exist at n in {2,4,5,6,8}", [] {
        // Conference constructions at n = 2 and 6.
        if (!is_symmetric_spectrum(char_poly(parse_matrix("2\n0+\n+0\n")))) return false;
        if (!is_symmetric_spectrum(char_poly(paley_conference(PrimeField::of(5)).seidel())))
            return false;
        // Bounded exhaustive search at n = 4 and 5.
        for (const int n : {4, 5}) {
            bool found = false;
            for (std::uint64_t mask = 0; mask < (1ULL << (n * (n - 1) / 2)) && !found; ++mask)
                found = is_symmetric_spectrum(char_poly(oracle::seidel_from_mask(n, mask)));
            if (!found) return false;
        }
        // Bounded random search at n = 8.
        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 200000; ++trial) {
            const auto s = oracle::random_seidel(8, rng);
            if (is_symmetric_spectrum(char_poly(s))) return true;
        }
        return false;
    });

    criterion(7, "Faddeev-LeVerrier matches the Bareiss interpolation oracle", [] {
        std::mt19937_64 rng(7001);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 6);
            const auto s = oracle::random_seidel(n, rng);
            if (char_poly(s).coeffs() != oracle::charpoly_eval_interp(s)) return false;
        }
        return true;
    });

    criterion(8, "switching/permutation invariance and equivalence", [] {
        std::mt19937_64 rng(8001);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 9);
            const auto s = oracle::random_seidel(n, rng);
            std::vector<std::int8_t> d(static_cast<std::size_t>(n));
            for (auto& v : d) v = rng() & 1 ? 1 : -1;
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto t = permute(apply_switching(s, SwitchingVector::from_signs(d)), perm);
            if (char_poly(t) != char_poly(s)) return false;
            if (!are_equivalent(s, t)) return false;
        }
        return true;
    });

    criterion(9, "equivalence matches brute force; 2 classes at n=3, 3 at n=4", [] {
        for (const int n : {3, 4}) {
            const auto all = oracle::all_seidel_matrices(n);
            std::set<CanonicalForm> classes;
            for (const auto& s : all) classes.insert(canonical_form(s));
            if (classes.size() != (n == 3 ? 2u : 3u)) return false;
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i; j < all.size(); ++j)
                    if (are_equivalent(all[i], all[j]) !=
                        oracle::brute_force_equivalent(all[i], all[j]))
                        return false;
        }
        return true;
    });

    criterion(10, "explore CLI is byte-deterministic under parallelism", [&cli] {
        if (cli.empty()) {
            std::cerr << "  (no CLI path given)\n";
            return false;
        }
        const std::string matrix = "acceptance_paley14.txt";
        if (std::system((cli + " paley --prime 13 --out " + matrix + " > /dev/null").c_str()) != 0)
            return false;
        const std::string base =
            cli + " explore --in " + matrix + " --k 4 --dedupe --seed 9 --sample 200 ";
        if (std::system((base + "--threads 8 --out acceptance_a.csv > /dev/null").c_str()) != 0)
            return false;
        if (std::system((base + "--threads 8 --out acceptance_b.csv > /dev/null").c_str()) != 0)
            return false;
        if (std::system((base + "--threads 1 --out acceptance_c.csv > /dev/null").c_str()) != 0)
            return false;
        const std::string a = read_all("acceptance_a.csv");
        return !a.empty() && a == read_all("acceptance_b.csv") && a == read_all("acceptance_c.csv");
    });

    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
