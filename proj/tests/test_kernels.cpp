#include <doctest.h>

#include <random>

#include "qapf/families.hpp"
#include "qapf/kernels.hpp"
#include "qapf/reductions.hpp"
#include "qapf/sweep.hpp"

using namespace qapf;

namespace {

std::vector<LinearForm> every_nth(int n, Family family, std::uint64_t stride)
{
    std::vector<LinearForm> out;
    std::uint64_t index = 0;
    enumerate_family(n, family, {}, [&](LinearForm&& f) {
        if (index++ % stride == 0) out.push_back(std::move(f));
        return true;
    });
    return out;
}

YPoint random_point(int n, std::mt19937_64& rng, int cells)
{
    YPoint y(n);
    std::uniform_int_distribution<int> flat(1, n * n);
    std::uniform_int_distribution<int> num(0, 12);
    std::uniform_int_distribution<int> den(1, 4);
    for (int c = 0; c < cells; ++c) y.set(UPair::of(flat(rng), flat(rng)), Rational(num(rng), den(rng)));
    return y;
}

}  // namespace

TEST_SUITE("kernels")
{
    TEST_CASE("serial and parallel lhs agree over all vertices")
    {
        for (int n : {6, 7}) {
            const VertexTable table(n);
            std::vector<std::int64_t> a(table.size()), b(table.size());
            std::vector<LinearForm> forms = every_nth(n, Family::Qap1, n == 6 ? 997 : 20011);
            if (n == 7) {
                for (Family f : {Family::Qap2, Family::Qap3, Family::Qap4}) {
                    auto more = every_nth(7, f, 97);
                    forms.insert(forms.end(), more.begin(), more.end());
                }
            }
            REQUIRE(forms.size() > 10);
            for (const auto& f : forms) {
                serial::lhs_over_vertices(f, table, a);
                parallel::lhs_over_vertices(f, table, b);
                REQUIRE(a == b);
                for (std::size_t v = 0; v < table.size(); v += 97) REQUIRE(a[v] == lhs_at_vertex(f, table.permutation(v)));

                serial::closed_slack_over_vertices(*f.params(), table, a);
                parallel::closed_slack_over_vertices(*f.params(), table, b);
                REQUIRE(a == b);
                for (std::size_t v = 0; v < table.size(); v += 89)
                    REQUIRE(Rational(a[v], 2) == closed_form_slack(*f.params(), table.permutation(v)));
            }
        }
    }

    TEST_CASE("vertex table matches the permutation order")
    {
        const VertexTable table(5);
        REQUIRE(table.size() == 120);
        for (std::size_t v = 0; v < table.size(); ++v) {
            const auto& s = table.permutation(v);
            CHECK(s == permutation_at(5, v));
            for (int i = 1; i <= 5; ++i) {
                for (int j = 1; j <= 5; ++j) CHECK(table.matched(flat_index(5, {i, j}))[v] == (s(i) == j));
            }
        }
    }

    TEST_CASE("first violation is the lowest index in both implementations")
    {
        const auto forms = collect_family(7, Family::Qap2);
        FormBatch batch(7);
        for (const auto& f : forms) batch.add(f);
        CHECK(batch.size() == forms.size());

        std::mt19937_64 rng(3);
        std::size_t hits = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const auto y = densify(random_point(7, rng, trial % 3 == 0 ? 4 : 40));
            const auto s = serial::first_violation(forms, y);
            const auto p = parallel::first_violation(batch, y);
            REQUIRE(s.has_value() == p.has_value());
            if (!s) continue;
            ++hits;
            CHECK(s->index == p->index);
            CHECK(s->lhs_numerator == p->lhs_numerator);
            for (std::size_t f = 0; f < s->index; ++f) REQUIRE(batch.evaluate(f, y).satisfied);
            CHECK_FALSE(batch.evaluate(s->index, y).satisfied);
        }
        CHECK(hits > 0);
        CHECK(hits < 60);
    }

    TEST_CASE("dense evaluation agrees with exact evaluation")
    {
        const auto forms = every_nth(7, Family::Qap3, 211);
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 20; ++trial) {
            const auto y = random_point(7, rng, 60);
            const auto d = densify(y);
            for (const auto& f : forms) {
                const auto exact = evaluate(f, y);
                const auto dense = evaluate_dense(f, d);
                REQUIRE(Rational(dense.lhs_numerator, d.denominator) == exact.lhs);
                REQUIRE(dense.satisfied == exact.satisfied);
            }
        }
    }

    TEST_CASE("serial and parallel sweeps report identically")
    {
        const VertexTable table(6);
        EnumerationBounds b;
        b.m_min = 3;
        b.m_max = 3;
        const auto s = sweep_family(table, Family::Qap1, b, KernelMode::Serial);
        const auto p = sweep_family(table, Family::Qap1, b, KernelMode::Parallel);
        CHECK(s.forms == 21600);
        CHECK(s.forms == p.forms);
        CHECK(s.vertices == 720);
        CHECK(s.violations == p.violations);
        CHECK(s.slack_mismatches == p.slack_mismatches);
        CHECK(s.passed());
        CHECK(p.passed());
    }

    TEST_CASE("sweep flags a mismatch through the observer's slack values")
    {
        const VertexTable table(7);
        std::uint64_t seen = 0;
        std::int64_t min_slack = 1;
        const auto r = sweep_family(table, Family::Qap4, {}, KernelMode::Parallel,
                                    [&](std::uint64_t, const LinearForm&, std::span<const std::int64_t> d) {
                                        ++seen;
                                        for (auto x : d) min_slack = std::min(min_slack, x);
                                    });
        CHECK(seen == r.forms);
        CHECK(min_slack == 0);
        CHECK(r.passed());
    }

    TEST_CASE("worker count can be set and restored")
    {
        set_worker_count(1);
        CHECK(worker_count() == 1);
        set_worker_count(0);
        CHECK(worker_count() >= 1);
    }
}
