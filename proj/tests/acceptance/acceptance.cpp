// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Exact criteria have zero tolerance; the Monte-Carlo one allows 4 standard errors in
// at least 99 of 100 seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "oracles.hpp"
#include "qapf/families.hpp"
#include "qapf/geometry.hpp"
#include "qapf/protocols.hpp"
#include "qapf/reductions.hpp"
#include "qapf/sweep.hpp"

using namespace qapf;

namespace {

constexpr double kStandardErrors = 4.0;
constexpr int kMonteCarloSeeds = 100;
constexpr int kMonteCarloRequired = 99;
constexpr std::uint64_t kMonteCarloSamples = 100000;
constexpr std::size_t kLemmaSamples = 200;
constexpr int kIdentity1Samples = 1000;
constexpr int kIdentity2Samples = 500;
constexpr int kRandomProtocolPairs = 500;
constexpr int kQap4Graphs = 120;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("criterion %2d %s  %s: %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string str(std::uint64_t x) { return std::to_string(x); }

std::uint64_t derangements(int n)
{
    std::uint64_t a = 1, b = 0;  // D(0), D(1)
    for (int i = 2; i <= n; ++i) {
        const std::uint64_t c = static_cast<std::uint64_t>(i - 1) * (a + b);
        a = b;
        b = c;
    }
    return n == 0 ? 1 : b;
}

// Sweeps shared by the validity and slack criteria.
struct SweepSet {
    std::vector<SweepReport> n6, n7;
};

const SweepSet& sweeps()
{
    static const SweepSet set = [] {
        SweepSet s;
        const VertexTable t6(6), t7(7);
        for (Family f : {Family::Qap1, Family::Qap2, Family::Qap3, Family::Qap4}) {
            s.n6.push_back(sweep_family(t6, f, {}, KernelMode::Parallel));
            s.n7.push_back(sweep_family(t7, f, {}, KernelMode::Parallel));
        }
        return s;
    }();
    return set;
}

Outcome validity()
{
    const auto& s = sweeps();
    std::uint64_t violations = 0;
    std::string detail;
    bool vacuous6 = true;
    for (const auto* group : {&s.n6, &s.n7}) {
        for (const auto& r : *group) {
            violations += r.violations;
            detail += std::string(to_string(r.family)) + "@" + str(static_cast<std::uint64_t>(r.n)) + "=" +
                      str(r.forms) + " ";
            if (group == &s.n6 && r.family != Family::Qap1) vacuous6 = vacuous6 && r.forms == 0;
        }
    }
    detail += "forms; violations " + str(violations);
    if (vacuous6) detail += "; qap2-4 have no forms at n=6 (vacuous)";
    return {violations == 0 && s.n6[0].forms > 0, detail};
}

Outcome slack_formulas()
{
    std::uint64_t mismatches = 0, forms = 0;
    for (const auto& r : sweeps().n7) {
        mismatches += r.slack_mismatches;
        forms += r.forms;
    }
    // Independent cross-check: literal sums on a thinned sample of forms and vertices.
    std::mt19937_64 rng(2);
    std::vector<Permutation> vertices;
    for (int i = 0; i < 25; ++i) vertices.push_back(permutation_at(7, rng() % 5040));
    std::uint64_t oracle_checks = 0, oracle_mismatches = 0;
    for (Family f : {Family::Qap1, Family::Qap2, Family::Qap3, Family::Qap4}) {
        std::uint64_t index = 0;
        const std::uint64_t stride = f == Family::Qap1 ? 4999 : f == Family::Qap3 ? 263 : 41;
        enumerate_family(7, f, {}, [&](LinearForm&& form) {
            if (index++ % stride != 0) return true;
            for (const auto& sigma : vertices) {
                ++oracle_checks;
                oracle_mismatches +=
                    oracle::family_slack(*form.params(), oracle::outer_product_vertex(sigma)) != slack_at_vertex(form, sigma);
            }
            return true;
        });
    }
    return {mismatches == 0 && oracle_mismatches == 0 && forms > 0,
            str(forms) + " forms x 5040 vertices, closed-form mismatches " + str(mismatches) +
                "; literal-sum cross-check " + str(oracle_checks) + " pairs, mismatches " + str(oracle_mismatches)};
}

const Qap4Params& canonical_qap4()
{
    static const Qap4Params p{7, {1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}};
    return p;
}

Outcome facet()
{
    const VertexTable table(7);
    const auto form = build_qap4(canonical_qap4());
    const auto modular = verify_facet(form, table);
    RankOptions certify;
    certify.certify = true;
    const auto rational = verify_facet(form, table, certify);
    const std::size_t primes = modular.tight ? modular.tight->report.ranks.size() : 0;
    const bool consensus = modular.tight && modular.tight->report.consensusRank && modular.polytope &&
                           modular.polytope->report.consensusRank;
    const bool pass = modular.label() == "facet" && primes >= 3 && consensus && rational.label() == "facet" &&
                      rational.tight->report.rationalRank == modular.tight->report.consensusRank;
    std::string detail = modular.label();
    if (modular.tight && modular.polytope) {
        detail += ", tight " + str(modular.tight_count) + " vertices dim " + str(modular.tight->dimension.value_or(0)) +
                  " vs polytope dim " + str(modular.polytope->dimension.value_or(0)) + ", " + str(primes) +
                  " primes agree; certified run: " + rational.label();
    }
    return {pass, detail};
}

Outcome equality_set()
{
    const VertexTable table(7);
    const auto r = check_equality_set(canonical_qap4(), table);
    std::size_t tight = 0;
    for (const auto& row : r.rows) tight += row.tight;
    const bool pass = r.passed() && r.rows.size() == 8 && tight == r.rows[1].vertices + r.rows[2].vertices;
    return {pass, "tight " + str(tight) + " = |S1| " + str(r.rows[1].vertices) + " + |S2| " + str(r.rows[2].vertices) +
                      ", mismatches " + str(r.mismatches)};
}

Outcome identities()
{
    std::mt19937_64 rng(5);
    int zero = 0;
    for (int trial = 0; trial < kIdentity1Samples; ++trial) {
        const int n = 6 + trial % 3;
        std::vector<int> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 1);
        std::shuffle(idx.begin(), idx.end(), rng);
        const auto sigmas = identity1_family(permutation_at(n, rng() % factorial(n)), {idx[0], idx[1], idx[2]});
        zero += check_identity1(sigmas, idx[3], idx[4]).zero();
    }
    int exact = 0;
    for (int trial = 0; trial < kIdentity2Samples; ++trial) {
        std::vector<int> idx(8);
        std::iota(idx.begin(), idx.end(), 1);
        std::shuffle(idx.begin(), idx.end(), rng);
        const auto chain = identity2_chain(permutation_at(8, rng() % factorial(8)), idx[0], idx[1], idx[2], idx[3]);
        const auto r = check_identity2(chain, idx[0], idx[1], idx[2], idx[3]);
        exact += r.nonzeros == 32 && r.positive == 16 && r.negative == 16;
    }
    return {zero == kIdentity1Samples && exact == kIdentity2Samples,
            "identity1 zero " + str(zero) + "/" + str(kIdentity1Samples) + " (n=6,7,8); identity2 32 nonzeros 16/16 in " +
                str(exact) + "/" + str(kIdentity2Samples) + " chains (n=8)"};
}

Outcome s0_connectivity()
{
    const VertexTable table(7);
    const auto r = check_s0_connectivity(table, diagonal_pattern(7));
    return {r.connected() && r.s0_size == derangements(7),
            "|S0| " + str(r.s0_size) + " (derangements " + str(derangements(7)) + "), " + str(r.edges) + " edges, " +
                str(r.components) + " component(s)"};
}

Outcome span_lemmas()
{
    const VertexTable table(7);
    const auto pattern = diagonal_pattern(7);
    std::vector<SpanLemmaReport> reports;
    for (int k = 4; k <= 7; ++k) {
        reports.push_back(check_lemma_high_layers(table, pattern, k, kLemmaSamples, 100 + static_cast<std::uint64_t>(k)));
    }
    reports.push_back(check_lemma_third_layer(table, pattern, kLemmaSamples, 200));
    reports.push_back(check_lemma_s0_differences(table, pattern, kLemmaSamples, 300));
    bool pass = true;
    std::string detail;
    for (const auto& r : reports) {
        const std::string name = r.k ? r.lemma + " k=" + str(static_cast<std::uint64_t>(*r.k)) : r.lemma;
        if (r.vacuous()) {
            detail += name + " vacuous (S_k empty); ";
            continue;
        }
        const bool consensus = r.generator_rank.consensusRank.has_value() && r.generator_rank.ranks.size() >= 3;
        pass = pass && r.passed() && r.members == r.samples && r.samples == kLemmaSamples && consensus;
        detail += name + " " + str(r.members) + "/" + str(r.samples) + "; ";
    }
    detail.resize(detail.size() - 2);
    return {pass, detail};
}

Outcome reductions()
{
    std::uint64_t qap1 = 0, qap2 = 0, qap4 = 0, disagreements = 0, skipped = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : nonisomorphic_graphs(n)) {
            const int omega = max_clique_bruteforce(g).size;
            if (g.with_isolated_vertices(std::max(n, 6)).complete()) {
                ++skipped;  // excluded instance: K_n after padding
            } else {
                ++qap1;
                disagreements += clique_via_membership_oracle(g, Family::Qap1).clique_number != omega;
            }
            OracleOptions o;
            o.pad_to = 9;
            ++qap2;
            disagreements += clique_via_membership_oracle(g, Family::Qap2, o).clique_number != omega;
        }
    }
    std::mt19937_64 rng(8);
    std::uint64_t by_membership = 0;
    for (int trial = 0; trial < kQap4Graphs; ++trial) {
        const int n = trial % 3 == 0 ? 7 : 8;
        Graph g = random_graph(n, 0.5, rng);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        const int planted = 5 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 4));  // 5..n
        for (int a = 0; a < planted; ++a) {
            for (int b = a + 1; b < planted; ++b) {
                if (!g.has_edge(order[a], order[b])) g.add_edge(order[a], order[b]);
            }
        }
        const auto r = clique_via_membership_oracle(g, Family::Qap4);
        ++qap4;
        by_membership += r.decided_by == "membership";
        disagreements += r.clique_number != max_clique_bruteforce(g).size;
    }
    return {disagreements == 0 && qap4 >= 100,
            "qap1 " + str(qap1) + " graphs (" + str(skipped) + " complete skipped), qap2 " + str(qap2) +
                " graphs padded to 9, qap4 " + str(qap4) + " random graphs at n=7,8 (" + str(by_membership) +
                " decided by membership); disagreements " + str(disagreements)};
}

Outcome protocols()
{
    std::uint64_t pairs = 0, wrong = 0, bit_violations = 0;
    for (int n = 2; n <= 5; ++n) {
        const auto oracle = send_vector_n1_oracle(n);
        for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
            for (std::uint64_t y = 0; y < (1ULL << n); ++y) {
                const auto a = BitVector::from_code(n, x);
                const auto b = BitVector::from_code(n, y);
                const auto n0 = protocol_n0_exact(a, b);
                const auto m1 = protocol_m1_composed(a, b, oracle);
                ++pairs;
                wrong += n0.expectation != hard_matrix_entry({HardKind::N, 0, n}, a, b);
                wrong += m1.expectation != hard_matrix_entry({HardKind::M, 1, n}, a, b);
                wrong += n0.total_probability != 1 || m1.total_probability != 1;
                bit_violations += n0.max_bits > 2 * index_bits(n);
                bit_violations += m1.max_bits > 1 + std::max(2 * index_bits(n), oracle.bits);
            }
        }
    }
    std::uint64_t embeddings = 0, embedding_failures = 0;
    for (int n = 3; n <= 10; ++n) {
        for (int k = 2; k <= n - 1; ++k) {
            ++embeddings;
            embedding_failures += !embedding_check(k, n).passed();
        }
    }
    return {wrong == 0 && bit_violations == 0 && embedding_failures == 0,
            str(pairs) + " pairs at n=2..5, wrong expectations " + str(wrong) + ", bit-bound violations " +
                str(bit_violations) + "; embeddings " + str(embeddings - embedding_failures) + "/" + str(embeddings)};
}

Outcome slack_protocols()
{
    struct Plan {
        Family family;
        int smallest;
        int larger;
    };
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(10);
    for (auto [family, smallest, larger] : {Plan{Family::Qap1, 6, 10}, Plan{Family::Qap2, 3, 8},
                                            Plan{Family::Qap3, 4, 6}, Plan{Family::Qap4, 7, 12}}) {
        std::uint64_t runs = 0, constructed = 0, wrong = 0;
        const auto check = [&](const BitVector& a, const BitVector& b) {
            const auto r = slack_protocol(family, a, b);
            const std::int64_t x = dot(a, b);
            const Rational n1((x - 1) * (x - 2));
            ++runs;
            if (r.short_circuit) {
                wrong += r.output != n1;
                return;
            }
            ++constructed;
            wrong += r.slack != n1 / 2 || r.closed_slack != n1 / 2 || r.output != 2 * r.slack || r.output != n1;
            if (family == Family::Qap3) wrong += qstats(*r.alice_params, *r.bob_permutation).q2 != 0;
        };
        for (std::uint64_t x = 0; x < (1ULL << smallest); ++x) {
            for (std::uint64_t y = 0; y < (1ULL << smallest); ++y) {
                check(BitVector::from_code(smallest, x), BitVector::from_code(smallest, y));
            }
        }
        const std::uint64_t mask = (1ULL << larger) - 1;
        for (int r = 0; r < kRandomProtocolPairs; ++r) {
            check(BitVector::from_code(larger, rng() & mask), BitVector::from_code(larger, rng() & mask));
        }
        pass = pass && wrong == 0 && constructed > 0;
        detail += std::string(to_string(family)) + " " + str(runs) + " runs (" + str(constructed) + " constructed), wrong " +
                  str(wrong) + "; ";
    }
    detail.resize(detail.size() - 2);
    return {pass, detail};
}

Outcome monte_carlo()
{
    int within = 0;
    for (int seed = 1; seed <= kMonteCarloSeeds; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 7919);
        const auto a = BitVector::from_code(10, rng() & 1023);
        const auto b = BitVector::from_code(10, rng() & 1023);
        const double exact = protocol_n0_exact(a, b).expectation.convert_to<double>();
        const auto s = protocol_n0_sample(a, b, kMonteCarloSamples, static_cast<std::uint64_t>(seed));
        within += std::abs(s.mean - exact) <= kStandardErrors * s.standard_error + 1e-9;
    }
    return {within >= kMonteCarloRequired,
            str(static_cast<std::uint64_t>(within)) + "/" + str(kMonteCarloSeeds) + " seeds within 4 SE at n=10, " +
                str(kMonteCarloSamples) + " samples each (need " + str(kMonteCarloRequired) + ")"};
}

}  // namespace

int main()
{
    run(1, "validity of QAP1-QAP4 at n=6,7", validity);
    run(2, "closed-form slack at n=7", slack_formulas);
    run(3, "QAP4 facet at n=m=7", facet);
    run(4, "equality set S1 u S2", equality_set);
    run(5, "identity suites", identities);
    run(6, "S0 connectivity", s0_connectivity);
    run(7, "span lemmas", span_lemmas);
    run(8, "reduction round trips", reductions);
    run(9, "protocol exactness", protocols);
    run(10, "slack protocol exactness", slack_protocols);
    run(11, "Monte-Carlo sanity", monte_carlo);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
