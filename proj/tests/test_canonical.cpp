#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "seidel/canonical.hpp"
#include "seidel/charpoly.hpp"

using namespace seidel;

namespace {

// Order-3 representatives of the two switching classes.
SeidelMatrix empty3() { return oracle::seidel_from_mask(3, 0); }
SeidelMatrix triangle3() { return oracle::seidel_from_mask(3, 0b111); }

} // namespace

TEST_CASE("normalize_at_vertex") {
    const SeidelMatrix s = parse_matrix("2\n0-\n-0\n");
    CHECK(normalize_at_vertex(s, 0) == parse_matrix("2\n0+\n+0\n"));
    CHECK_THROWS_AS(normalize_at_vertex(s, 2), std::invalid_argument);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const SeidelMatrix m = oracle::random_seidel(n, rng);
        const int v = static_cast<int>(rng() % n);
        const SeidelMatrix t = normalize_at_vertex(m, v);
        for (int j = 0; j < n; ++j)
            if (j != v) CHECK(t.at(v, j) == 1);
        CHECK(normalize_at_vertex(t, v) == t); // idempotent
        // Already-normalized input is unchanged.
        if (t == m) CHECK(normalize_at_vertex(m, v) == m);
    }
}

TEST_CASE("canonical_form identifies switching-equivalent matrices") {
    CHECK(canonical_form(parse_matrix("2\n0+\n+0\n")) == canonical_form(parse_matrix("2\n0-\n-0\n")));

    std::set<CanonicalForm> forms3;
    for (const auto& s : oracle::all_seidel_matrices(3)) forms3.insert(canonical_form(s));
    CHECK(forms3.size() == 2);

    std::set<CanonicalForm> forms4;
    for (const auto& s : oracle::all_seidel_matrices(4)) forms4.insert(canonical_form(s));
    CHECK(forms4.size() == 3);
}

TEST_CASE("canonical_form is invariant under switching and permutation") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const SeidelMatrix s = oracle::random_seidel(n, rng);
        const CanonicalForm f = canonical_form(s);
        CHECK(static_cast<int>(f.bits().size()) == (n - 1) * (n - 2) / 2);

        std::vector<std::int8_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng() & 1 ? 1 : -1;
        CHECK(canonical_form(apply_switching(s, SwitchingVector::from_signs(d))) == f);

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permute(s, perm)) == f);
    }
}

TEST_CASE("are_equivalent on the small examples") {
    const SeidelMatrix s = oracle::seidel_from_mask(4, 0b0110);
    const auto d = SwitchingVector::from_signs({1, -1, -1, 1});
    CHECK(are_equivalent(s, apply_switching(s, d)));
    const int perm[] = {2, 0, 3, 1};
    CHECK(are_equivalent(s, permute(s, perm)));

    CHECK_FALSE(are_equivalent(empty3(), triangle3()));
    CHECK_FALSE(oracle::brute_force_equivalent(empty3(), triangle3()));
    CHECK_FALSE(are_equivalent(empty3(), oracle::seidel_from_mask(4, 0))); // order mismatch
}

TEST_CASE("are_equivalent agrees with the brute-force oracle") {
    for (int n : {3, 4}) {
        const auto all = oracle::all_seidel_matrices(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j)
                CHECK(are_equivalent(all[i], all[j]) ==
                      oracle::brute_force_equivalent(all[i], all[j]));
    }
    // Order 5: random pairs (exhaustive pairing is out of desk scale here).
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const SeidelMatrix a = oracle::random_seidel(5, rng);
        SeidelMatrix b = oracle::random_seidel(5, rng);
        if (trial % 2 == 0) {
            // Bias half the trials toward equivalent pairs.
            std::vector<std::int8_t> d(5);
            for (auto& v : d) v = rng() & 1 ? 1 : -1;
            std::vector<int> perm{0, 1, 2, 3, 4};
            std::shuffle(perm.begin(), perm.end(), rng);
            b = permute(apply_switching(a, SwitchingVector::from_signs(d)), perm);
        }
        CHECK(are_equivalent(a, b) == oracle::brute_force_equivalent(a, b));
    }
}

TEST_CASE("equivalent matrices share characteristic polynomials") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const SeidelMatrix a = oracle::random_seidel(n, rng);
        std::vector<std::int8_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng() & 1 ? 1 : -1;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const SeidelMatrix b = permute(apply_switching(a, SwitchingVector::from_signs(d)), perm);
        REQUIRE(are_equivalent(a, b));
        CHECK(char_poly(a) == char_poly(b));
    }
}

TEST_CASE("canonical key rendering") {
    const CanonicalForm f = canonical_form(triangle3());
    const std::string key = f.render();
    CHECK(key.substr(0, 2) == "3:");
    CHECK(key != canonical_form(empty3()).render());
    CHECK(canonical_form(parse_matrix("2\n0+\n+0\n")).render() == "2:");
}
