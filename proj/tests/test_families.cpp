#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qapf/families.hpp"
#include "qapf/reductions.hpp"

using namespace qapf;

namespace {

std::size_t count_coef(const LinearForm& f, std::int64_t c, bool diagonal)
{
    std::size_t k = 0;
    if (diagonal) {
        for (const auto& t : f.diag()) k += t.coef == c;
    } else {
        for (const auto& t : f.offdiag()) k += t.coef == c;
    }
    return k;
}

std::string rejection(const FamilyParams& p)
{
    try {
        validate_params(p);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

// Every `stride`-th form of the family, starting at `offset`.
std::vector<LinearForm> thinned(int n, Family family, std::uint64_t stride, std::uint64_t offset)
{
    std::vector<LinearForm> out;
    std::uint64_t index = 0;
    enumerate_family(n, family, {}, [&](LinearForm&& f) {
        if (index++ % stride == offset) out.push_back(std::move(f));
        return true;
    });
    return out;
}

Qap5Params random_qap5(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> beta(-2, 3);
    Qap5Params p{n, beta(rng), {}};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (const int c = coef(rng); c != 0) p.coeffs[{i, j}] = c;
        }
    }
    return p;
}

}  // namespace

TEST_SUITE("inequality-families")
{
    TEST_CASE("QAP1 term structure and the n >= 6 condition")
    {
        const Qap1Params p{6, {1, 2, 3}, {1, 2, 3}, 4, 4};
        const auto f = build_qap1(p);
        CHECK(f.sense() == Sense::LessEqual);
        CHECK(f.rhs() == 0);
        CHECK(f.scale() == 1);
        CHECK(count_coef(f, 1, false) == 3);
        CHECK(count_coef(f, -1, false) == 3);
        CHECK(f.offdiag().size() == 6);
        REQUIRE(f.diag().size() == 1);
        CHECK(f.diag()[0].coef == -1);
        CHECK(f.diag()[0].flat == flat_index(6, {4, 4}));

        CHECK(rejection(Qap1Params{5, {1, 2, 3}, {1, 2, 3}, 4, 4}).find('6') != std::string::npos);
        CHECK_FALSE(rejection(Qap1Params{6, {1, 2, 4}, {1, 2, 3}, 4, 4}).empty());  // k among the i's
        CHECK_FALSE(rejection(Qap1Params{6, {1, 2}, {1, 2}, 4, 4}).empty());        // m < 3

        // identity: q = 3, P(4,4) = 1, lhs = 3 - 1 - 3
        CHECK(lhs_at_vertex(f, Permutation::identity(6)) == -1);
        CHECK(oracle::family_slack(p, oracle::outer_product_vertex(Permutation::identity(6))) == 1);
    }

    TEST_CASE("QAP2 term structure and conditions")
    {
        const Qap2Params p{7, {1, 2, 3}, {1, 2, 3}, 2};
        const auto f = build_qap2(p);
        CHECK(f.scale() == 2);
        CHECK(f.diag().size() == 9);
        CHECK(count_coef(f, 2, true) == 9);  // unscaled 1
        CHECK(f.rhs() == 2);                 // unscaled 1
        // i < k pairs within P x Q: 3 pairs of rows, 3 x 3 columns each
        CHECK(f.offdiag().size() == 27);
        CHECK(count_coef(f, -2, false) == 27);
        CHECK_FALSE(rejection(Qap2Params{7, {1, 2, 3}, {1, 2, 3}, 1}).empty());
        CHECK_FALSE(rejection(Qap2Params{7, {1, 2, 3, 4}, {1, 2, 3, 4}, 2}).empty());
    }

    TEST_CASE("QAP3 coefficients and conditions")
    {
        const Qap3Params p{13, {4, 5, 6}, {7}, {1, 2, 3}, 2};
        const auto f = build_qap3(p);
        CHECK(f.sense() == Sense::GreaterEqual);
        CHECK(f.scale() == 2);
        for (const auto& t : f.diag()) {
            const auto x = pair_from_flat(13, t.flat);
            CHECK(t.coef == (x.i == 7 ? 4 : -2));
        }
        CHECK(f.diag().size() == 12);
        CHECK_FALSE(rejection(Qap3Params{13, {4, 5, 6}, {6}, {1, 2, 3}, 2}).empty());
        CHECK_FALSE(rejection(Qap3Params{13, {4, 5, 6}, {7}, {1, 2}, 2}).empty());
    }

    TEST_CASE("QAP4 term structure and conditions")
    {
        const Qap4Params p{7, {1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}};
        const auto f = build_qap4(p);
        CHECK(f.rhs() == 1);
        CHECK(f.scale() == 1);
        CHECK(count_coef(f, 1, true) == 7);
        CHECK(count_coef(f, -1, false) == 21);
        CHECK_FALSE(rejection(Qap4Params{7, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}}).empty());
        CHECK_FALSE(rejection(Qap4Params{6, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}}).empty());
    }

    TEST_CASE("QAP4 is QAP5 at beta = 2 scaled by -2")
    {
        const Qap4Params p4{8, {1, 3, 5, 6, 7, 8, 2}, {2, 1, 4, 3, 8, 6, 7}};
        Qap5Params p5{8, 2, {}};
        for (std::size_t r = 0; r < p4.iSet.size(); ++r) p5.coeffs[{p4.iSet[r], p4.jSet[r]}] = 1;
        const auto f4 = build_qap4(p4);
        const auto f5 = build_qap5(p5);
        CHECK(f5.sense() == Sense::GreaterEqual);
        CHECK(f5.rhs() == -2 * f4.rhs());
        REQUIRE(f5.diag().size() == f4.diag().size());
        REQUIRE(f5.offdiag().size() == f4.offdiag().size());
        for (std::size_t t = 0; t < f4.diag().size(); ++t) {
            CHECK(f5.diag()[t].flat == f4.diag()[t].flat);
            CHECK(f5.diag()[t].coef == -2 * f4.diag()[t].coef);
        }
        for (std::size_t t = 0; t < f4.offdiag().size(); ++t) {
            CHECK(f5.offdiag()[t].cell == f4.offdiag()[t].cell);
            CHECK(f5.offdiag()[t].coef == -2 * f4.offdiag()[t].coef);
        }
    }

    TEST_CASE("QAP5 examples")
    {
        const auto single = build_qap5(Qap5Params{5, 2, {{{1, 1}, 1}}});
        REQUIRE(single.diag().size() == 1);
        CHECK(single.diag()[0].coef == -2);
        CHECK(single.rhs() == -2);
        for_each_permutation(5, [&](const Permutation& s) {
            const auto lhs = lhs_at_vertex(single, s);
            CHECK((lhs == -2 || lhs == 0));
            return true;
        });
        const auto zero = build_qap5(Qap5Params{5, 1, {}});
        for_each_permutation(5, [&](const Permutation& s) {
            CHECK(slack_at_vertex(zero, s) == 0);
            return true;
        });
    }

    TEST_CASE("random QAP5 slack is (s - beta)(s - beta + 1) on all 120 vertices")
    {
        std::mt19937_64 rng(5);
        const auto perms = all_permutations(5);
        for (int trial = 0; trial < 25; ++trial) {
            const auto p = random_qap5(5, rng);
            const auto f = build_qap5(p);
            for (const auto& s : perms) {
                std::int64_t sum = 0;
                for (int i = 1; i <= 5; ++i) {
                    auto it = p.coeffs.find({i, s(i)});
                    if (it != p.coeffs.end()) sum += it->second;
                }
                const Rational want((sum - p.beta) * (sum - p.beta + 1));
                REQUIRE(slack_at_vertex(f, s) == want);
                REQUIRE(closed_form_slack(p, s) == want);
                REQUIRE(oracle::family_slack(p, oracle::outer_product_vertex(s)) == want);
            }
        }
    }

    TEST_CASE("closed forms at the lemma's tight and extreme cases")
    {
        const Qap4Params p4{7, {1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}};
        CHECK(closed_form_slack(p4, Permutation::identity(7)) == 15);  // q = 7
        CHECK(doubled_slack::qap2(1, 2) == 0);                         // q = beta - 1
        CHECK(doubled_slack::qap2(2, 2) == 0);                         // q = beta
        CHECK(doubled_slack::qap3(3, 0, 3) == 0);                      // q1 = beta, q2 = 0
        CHECK(binom2(-1) == 1);
        CHECK(binom2(0) == 0);
    }

    TEST_CASE("sampled forms agree with the literal sums at sampled vertices")
    {
        std::mt19937_64 rng(17);
        std::vector<Permutation> vertices;
        for (int r = 0; r < 40; ++r) vertices.push_back(permutation_at(7, rng() % 5040));
        vertices.push_back(Permutation::identity(7));
        struct Sampled {
            Family family;
            std::uint64_t stride;
        };
        for (auto [family, stride] : {Sampled{Family::Qap1, 6007}, Sampled{Family::Qap2, 13},
                                      Sampled{Family::Qap3, 331}, Sampled{Family::Qap4, 53}}) {
            const auto forms = thinned(7, family, stride, 3);
            REQUIRE(forms.size() >= 20);
            for (const auto& sigma : vertices) {
                const auto dense = oracle::outer_product_vertex(sigma);
                for (const auto& f : forms) {
                    const Rational want = oracle::family_slack(*f.params(), dense);
                    REQUIRE(slack_at_vertex(f, sigma) == want);
                    REQUIRE(closed_form_slack(*f.params(), sigma) == want);
                    REQUIRE(want >= 0);
                }
            }
        }
    }

    TEST_CASE("evaluate on reduction points matches the dense oracle")
    {
        Graph g(7);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(1, 3);
        g.add_edge(3, 4);
        for (int t : {1, 2, 3}) {
            const YPoint y = build_point_qap2(g, t);
            const auto dense = oracle::dense_point(y);
            for (const auto& f : thinned(7, Family::Qap2, 7, 0)) {
                const auto e = evaluate(f, y);
                REQUIRE(e.slack == oracle::family_slack(*f.params(), dense));
                REQUIRE(e.satisfied == (e.slack >= 0));
            }
        }
    }

    TEST_CASE("evaluate basics")
    {
        const auto q1 = build_qap1(Qap1Params{6, {1, 2, 3}, {1, 2, 3}, 4, 4});
        const auto zero = evaluate(q1, YPoint(6));
        CHECK(zero.lhs == 0);
        CHECK(zero.satisfied);
        CHECK_THROWS_AS(evaluate(q1, YPoint(7)), std::invalid_argument);

        const auto q4 = build_qap4(Qap4Params{7, {1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}});
        // matches exactly (1,1), (2,2), (3,3)
        const auto e = evaluate(q4, YPoint::from_vertex(QapVertex(Permutation({1, 2, 3, 5, 6, 7, 4}))));
        CHECK(e.lhs == 0);
        CHECK(e.slack == 1);
    }

    TEST_CASE("QAP1 count by two independent routines")
    {
        for (int m = 3; m <= 5; ++m) {
            EnumerationBounds b;
            b.m_min = m;
            b.m_max = m;
            const auto s = enumerate_family(6, Family::Qap1, b, [](LinearForm&&) { return true; });
            CHECK(s.count == oracle::count_qap1_direct(6, m));
            CHECK(s.count == qap1_form_count(6, m, m));
        }
        CHECK(oracle::count_qap1_direct(6, 3) == 21600);
    }

    TEST_CASE("QAP4 at n = 7 has 5040 distinct forms")
    {
        const auto forms = collect_family(7, Family::Qap4);
        CHECK(forms.size() == 5040);
        std::set<std::vector<int>> supports;
        for (const auto& f : forms) {
            std::vector<int> flats;
            for (const auto& t : f.diag()) flats.push_back(t.flat);
            supports.insert(flats);
        }
        CHECK(supports.size() == 5040);
    }

    TEST_CASE("empty families carry a note and QAP5 needs bounds")
    {
        for (Family f : {Family::Qap2, Family::Qap3, Family::Qap4}) {
            const auto s = enumerate_family(6, f, {}, [](LinearForm&&) { return true; });
            CHECK(s.count == 0);
            CHECK_FALSE(s.note.empty());
        }
        CHECK_THROWS_AS(enumerate_family(5, Family::Qap5, {}, [](LinearForm&&) { return true; }),
                        std::invalid_argument);
        EnumerationBounds b;
        b.beta_min = 0;
        b.beta_max = 1;
        b.coeff_min = -1;
        b.coeff_max = 1;
        b.max_support = 1;
        const auto s = enumerate_family(3, Family::Qap5, b, [](LinearForm&&) { return true; });
        CHECK(s.count > 0);
    }

    TEST_CASE("enumeration is deterministic")
    {
        const auto a = collect_family(7, Family::Qap2);
        const auto b = collect_family(7, Family::Qap2);
        CHECK(a.size() == 1225);
        CHECK(a == b);
    }
}
