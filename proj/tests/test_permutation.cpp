#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qapf/permutation.hpp"
#include "qapf/vertex.hpp"

using namespace qapf;

TEST_SUITE("perm-core")
{
    TEST_CASE("permutation rejects non-bijective images")
    {
        CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(Permutation::parse("1 2 4"), std::invalid_argument);
        CHECK(Permutation::parse("3 1 2") == Permutation({3, 1, 2}));
    }

    TEST_CASE("identity vertex at n=2 has the three canonical cells")
    {
        const QapVertex v(Permutation::identity(2));
        const std::vector<UPair> want{{1, 1}, {1, 4}, {4, 4}};  // (11,11), (11,22), (22,22)
        CHECK(v.entries() == want);
        CHECK(v.value(PairIndex{2, 2}, PairIndex{1, 1}) == 1);
        CHECK(v.value(PairIndex{1, 2}, PairIndex{1, 2}) == 0);
    }

    TEST_CASE("swap vertex at n=2")
    {
        const QapVertex v(Permutation({2, 1}));
        const std::vector<UPair> want{{2, 2}, {2, 3}, {3, 3}};  // (12,12), (12,21), (21,21)
        CHECK(v.entries() == want);
    }

    TEST_CASE("vertex matches the dense outer product")
    {
        std::mt19937_64 rng(7);
        std::vector<Permutation> sigmas{Permutation::identity(7)};
        for (int r = 0; r < 5; ++r) {
            std::vector<int> image{1, 2, 3, 4, 5, 6, 7};
            std::shuffle(image.begin(), image.end(), rng);
            sigmas.emplace_back(image);
        }
        for (const auto& sigma : sigmas) {
            const QapVertex v(sigma);
            const auto dense = oracle::outer_product_vertex(sigma);
            for (int f = 1; f <= 49; ++f) {
                for (int g = 1; g <= 49; ++g) REQUIRE(Rational(v.value(UPair::of(f, g))) == dense.at(f, g));
            }
        }
        const QapVertex id(Permutation::identity(7));
        std::size_t diag = 0;
        for (auto e : id.entries()) diag += e.diagonal();
        CHECK(diag == 7);
        CHECK(id.entries().size() - diag == 21);
    }

    TEST_CASE("every vertex up to n=7 is symmetric with n^2 nonzero cells")
    {
        for (int n = 1; n <= 7; ++n) {
            for_each_permutation(n, [&](const Permutation& sigma) {
                const QapVertex v(sigma);
                std::size_t cells = 0;
                for (auto e : v.entries()) cells += e.diagonal() ? 1 : 2;
                REQUIRE(cells == static_cast<std::size_t>(n * n));
                for (auto e : v.entries()) {
                    const auto x = pair_from_flat(n, e.a);
                    const auto y = pair_from_flat(n, e.b);
                    REQUIRE(v.value(x, y) == 1);
                    REQUIRE(v.value(y, x) == 1);
                }
                return true;
            });
        }
    }

    TEST_CASE("transposition swaps two images and is an involution")
    {
        CHECK(apply_transposition(Permutation::identity(3), 1, 2) == Permutation({2, 1, 3}));
        CHECK_THROWS_AS(apply_transposition(Permutation::identity(3), 2, 2), std::invalid_argument);
        CHECK_THROWS_AS(apply_transposition(Permutation::identity(3), 0, 2), std::invalid_argument);
        std::mt19937_64 rng(11);
        for (int r = 0; r < 100; ++r) {
            const auto sigma = permutation_at(7, rng() % factorial(7));
            const int x = static_cast<int>(rng() % 7) + 1;
            const int y = x % 7 + 1;
            const auto tau = apply_transposition(sigma, x, y);
            int diff = 0;
            for (int i = 1; i <= 7; ++i) diff += sigma(i) != tau(i);
            CHECK(diff == 2);
            CHECK(apply_transposition(tau, x, y) == sigma);
        }
    }

    TEST_CASE("enumeration counts, order and cap")
    {
        CHECK(all_permutations(3).size() == 6);
        CHECK(all_permutations(7).size() == 5040);
        const auto one = all_permutations(1);
        REQUIRE(one.size() == 1);
        CHECK(one[0] == Permutation::identity(1));
        const auto five = all_permutations(5);
        CHECK(std::is_sorted(five.begin(), five.end()));
        CHECK(std::set<Permutation>(five.begin(), five.end()).size() == 120);
        for (std::uint64_t r = 0; r < five.size(); ++r) CHECK(permutation_at(5, r) == five[r]);
        try {
            all_permutations(10);
            FAIL("cap not enforced");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find('9') != std::string::npos);
        }
        std::uint64_t raised = 0;
        for_each_permutation(10, [&](const Permutation&) { return ++raised > 0; }, 10);
        CHECK(raised == 3628800);
    }

    TEST_CASE("flat index round trip")
    {
        for (int n = 1; n <= 9; ++n) {
            for (int f = 1; f <= n * n; ++f) CHECK(flat_index(n, pair_from_flat(n, f)) == f);
        }
        CHECK(flat_index(7, PairIndex{2, 3}) == 10);
    }

    TEST_CASE("sign is parity")
    {
        CHECK(Permutation::identity(4).sign() == 1);
        CHECK(Permutation({2, 1, 3}).sign() == -1);
        CHECK(Permutation({2, 3, 1}).sign() == 1);
    }
}
