#include "qapf/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "qapf/families.hpp"

namespace qapf {

void validate_pattern(int n, const Pattern& pattern)
{
    std::vector<bool> seen_i(static_cast<std::size_t>(n) + 1), seen_j(static_cast<std::size_t>(n) + 1);
    for (const auto& p : pattern) {
        if (p.i < 1 || p.i > n || p.j < 1 || p.j > n) {
            throw std::invalid_argument("pattern pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                        ") outside [" + std::to_string(n) + "]");
        }
        if (seen_i[static_cast<std::size_t>(p.i)]) throw std::invalid_argument("pattern repeats i = " + std::to_string(p.i));
        if (seen_j[static_cast<std::size_t>(p.j)]) throw std::invalid_argument("pattern repeats j = " + std::to_string(p.j));
        seen_i[static_cast<std::size_t>(p.i)] = seen_j[static_cast<std::size_t>(p.j)] = true;
    }
}

Pattern diagonal_pattern(int m)
{
    Pattern p;
    for (int r = 1; r <= m; ++r) p.push_back({r, r});
    return p;
}

int classify_vertex(const Permutation& sigma, const Pattern& pattern)
{
    validate_pattern(sigma.size(), pattern);
    return static_cast<int>(std::count_if(pattern.begin(), pattern.end(), [&](PairIndex p) { return sigma.maps(p); }));
}

std::vector<std::vector<std::size_t>> split_by_matches(const VertexTable& table, const Pattern& pattern)
{
    validate_pattern(table.n(), pattern);
    std::vector<std::vector<std::size_t>> layers(pattern.size() + 1);
    for (std::size_t v = 0; v < table.size(); ++v) {
        const auto& s = table.permutation(v);
        const auto k = std::count_if(pattern.begin(), pattern.end(), [&](PairIndex p) { return s.maps(p); });
        layers[static_cast<std::size_t>(k)].push_back(v);
    }
    return layers;
}

SparseVector vertex_vector(const Permutation& sigma) { return QapVertex(sigma).to_sparse(); }

AffineDimension vertex_set_dimension(const VertexTable& table, const std::vector<std::size_t>& members,
                                     const RankOptions& options)
{
    std::vector<SparseVector> points;
    points.reserve(members.size());
    for (std::size_t v : members) points.push_back(vertex_vector(table.permutation(v)));
    return affine_dimension(points, coordinate_count(table.n()), options);
}

const AffineDimension& polytope_dimension(const VertexTable& table, const RankOptions& options)
{
    using Key = std::tuple<int, int, int, std::uint64_t, bool>;
    static std::mutex guard;
    static std::map<Key, AffineDimension> cache;
    const Key key{table.n(), options.primes, options.escalation_primes, options.seed, options.certify};
    std::lock_guard lock(guard);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<std::size_t> all(table.size());
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
        it = cache.emplace(key, vertex_set_dimension(table, all, options)).first;
    }
    return it->second;
}

std::string FacetVerdict::label() const
{
    if (!valid) return "invalid";
    if (inconclusive) return "inconclusive";
    return facet ? "facet" : "not facet";
}

FacetVerdict verify_facet(const LinearForm& form, const VertexTable& table, const RankOptions& options,
                          KernelMode mode)
{
    FacetVerdict verdict;
    std::vector<std::int64_t> lhs(table.size());
    lhs_over_vertices(mode, form, table, lhs);
    std::vector<std::size_t> tight;
    for (std::size_t v = 0; v < table.size(); ++v) {
        const std::int64_t gap = form.sense() == Sense::LessEqual ? form.rhs() - lhs[v] : lhs[v] - form.rhs();
        if (gap < 0 && !verdict.violating) {
            verdict.violating = table.permutation(v);
            verdict.violating_slack = Rational(gap, form.scale());
        }
        if (gap == 0) tight.push_back(v);
    }
    if (verdict.violating) return verdict;
    verdict.valid = true;
    verdict.tight_count = tight.size();
    verdict.polytope = polytope_dimension(table, options);
    if (tight.empty()) return verdict;
    verdict.tight = vertex_set_dimension(table, tight, options);
    if (!verdict.tight->dimension || !verdict.polytope->dimension) {
        verdict.inconclusive = true;
        return verdict;
    }
    verdict.facet = *verdict.tight->dimension + 1 == *verdict.polytope->dimension;
    return verdict;
}

EqualitySetReport check_equality_set(const Qap4Params& params, const VertexTable& table)
{
    const LinearForm form = build_qap4(params);
    Pattern pattern;
    for (std::size_t r = 0; r < params.iSet.size(); ++r) pattern.push_back({params.iSet[r], params.jSet[r]});
    const auto layers = split_by_matches(table, pattern);

    EqualitySetReport report;
    for (std::size_t k = 0; k < layers.size(); ++k) {
        EqualityClassRow row;
        row.k = static_cast<int>(k);
        row.vertices = layers[k].size();
        bool first = true;
        for (std::size_t v : layers[k]) {
            const Rational slack = slack_at_vertex(form, table.permutation(v));
            if (first || slack < row.min_slack) row.min_slack = slack;
            if (first || slack > row.max_slack) row.max_slack = slack;
            first = false;
            const bool is_tight = slack == 0;
            row.tight += is_tight ? 1 : 0;
            if (is_tight != (k == 1 || k == 2)) ++report.mismatches;
        }
        report.rows.push_back(row);
    }
    return report;
}

std::vector<Permutation> identity1_family(const Permutation& base, const std::array<int, 3>& moved)
{
    std::vector<int> values;
    for (int pos : moved) values.push_back(base(pos));
    std::sort(values.begin(), values.end());
    std::vector<Permutation> out;
    do {
        std::vector<int> image(base.image().begin(), base.image().end());
        for (std::size_t r = 0; r < 3; ++r) image[static_cast<std::size_t>(moved[r] - 1)] = values[r];
        out.emplace_back(std::move(image));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

namespace {

/// The positions where the six permutations do not all agree.
std::vector<int> disagreement_positions(const std::vector<Permutation>& sigmas)
{
    std::vector<int> out;
    for (int z = 1; z <= sigmas.front().size(); ++z) {
        const int v = sigmas.front()(z);
        if (std::any_of(sigmas.begin(), sigmas.end(), [&](const Permutation& s) { return s(z) != v; })) out.push_back(z);
    }
    return out;
}

}  // namespace

std::vector<std::pair<int, Permutation>> identity1_terms(const std::vector<Permutation>& sigmas, int x, int y)
{
    if (sigmas.size() != 6) {
        throw std::invalid_argument("identity1 needs exactly 6 permutations, got " + std::to_string(sigmas.size()));
    }
    const int n = sigmas.front().size();
    for (const auto& s : sigmas) {
        if (s.size() != n) throw std::invalid_argument("identity1: permutations of different sizes");
    }
    std::vector<Permutation> sorted = sigmas;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("identity1: the 6 permutations are not distinct");
    }
    const auto moved = disagreement_positions(sigmas);
    if (moved.size() > 3) {
        throw std::invalid_argument("identity1: permutations disagree at index " + std::to_string(moved[3]) +
                                    " beyond three positions");
    }
    if (x < 1 || x > n || y < 1 || y > n || x == y) {
        throw std::invalid_argument("identity1: x and y must be distinct indices in [n]");
    }
    for (int z : moved) {
        if (z == x || z == y) throw std::invalid_argument("identity1: x or y coincides with moved index " + std::to_string(z));
    }
    std::vector<std::pair<int, Permutation>> terms;
    for (const auto& s : sigmas) terms.emplace_back(s.sign(), s);
    for (const auto& s : sigmas) {
        Permutation t = apply_transposition(s, x, y);
        terms.emplace_back(t.sign(), std::move(t));
    }
    return terms;
}

Identity1Report check_identity1(const std::vector<Permutation>& sigmas, int x, int y)
{
    const auto terms = identity1_terms(sigmas, x, y);
    Identity1Report report;
    const auto moved = disagreement_positions(sigmas);
    for (std::size_t r = 0; r < moved.size(); ++r) report.moved[r] = moved[r];
    report.x = x;
    report.y = y;
    report.nonzero_cells = signed_vertex_sum(terms).size();
    return report;
}

std::array<Permutation, 4> identity2_chain(const Permutation& sigma1, int i, int j, int ip, int jp)
{
    Permutation s2 = apply_transposition(sigma1, i, j);
    Permutation s3 = apply_transposition(s2, ip, jp);
    Permutation s4 = apply_transposition(s3, i, j);
    return {sigma1, std::move(s2), std::move(s3), std::move(s4)};
}

Identity2Report check_identity2(const std::array<Permutation, 4>& chain, int i, int j, int ip, int jp)
{
    if (ip == i || ip == j || jp == i || jp == j) {
        throw std::invalid_argument("identity2: i' and j' must lie outside {i, j}");
    }
    const auto expected = identity2_chain(chain[0], i, j, ip, jp);
    for (std::size_t s = 1; s < 4; ++s) {
        if (chain[s] != expected[s]) {
            throw std::invalid_argument("identity2: sigma_" + std::to_string(s + 1) +
                                        " is not the required transposition of sigma_" + std::to_string(s));
        }
    }
    const auto sum = signed_vertex_sum({{1, chain[0]}, {-1, chain[1]}, {-1, chain[3]}, {1, chain[2]}});
    const int n = chain[0].size();
    Identity2Report report;
    for (const auto& [cell, value] : sum) {
        ++report.nonzeros;
        (value > 0 ? report.positive : report.negative) += 1;
        report.affected_flats.insert(cell.row);
        report.affected_flats.insert(cell.col);
        report.cells.insert({pair_from_flat(n, cell.row), pair_from_flat(n, cell.col), value > 0 ? 1 : -1});
    }
    return report;
}

namespace {

std::uint64_t encode(const Permutation& s)
{
    std::uint64_t key = 0;
    for (int v : s.image()) key = key * 16 + static_cast<std::uint64_t>(v);
    return key;
}

}  // namespace

ConnectivityReport check_s0_connectivity(const VertexTable& table, const Pattern& pattern)
{
    const auto layers = split_by_matches(table, pattern);
    const auto& s0 = layers.front();
    ConnectivityReport report;
    report.s0_size = s0.size();
    if (s0.empty()) return report;

    std::unordered_map<std::uint64_t, std::size_t> node_of;
    for (std::size_t u = 0; u < s0.size(); ++u) node_of.emplace(encode(table.permutation(s0[u])), u);

    const int n = table.n();
    std::vector<std::size_t> component(s0.size(), s0.size());
    std::size_t edge_ends = 0;
    for (std::size_t start = 0; start < s0.size(); ++start) {
        if (component[start] != s0.size()) continue;
        const std::size_t label = report.components++;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        component[start] = label;
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            const Permutation& s = table.permutation(s0[u]);
            for (int x = 1; x <= n; ++x) {
                for (int y = x + 1; y <= n; ++y) {
                    const auto it = node_of.find(encode(apply_transposition(s, x, y)));
                    if (it == node_of.end()) continue;
                    ++edge_ends;
                    if (component[it->second] == s0.size()) {
                        component[it->second] = label;
                        frontier.push(it->second);
                    }
                }
            }
        }
    }
    report.edges = edge_ends / 2;
    return report;
}

MembershipVerdict check_span_membership(const SparseVector& target, const std::vector<SparseVector>& generators,
                                        int n, const RankOptions& options)
{
    return SpanChecker(generators, coordinate_count(n), options).contains(target);
}

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

std::vector<SparseVector> layer_vectors(const VertexTable& table,
                                        const std::vector<std::vector<std::size_t>>& layers,
                                        const std::vector<int>& ks)
{
    std::vector<SparseVector> out;
    for (int k : ks) {
        if (k < 0 || k >= static_cast<int>(layers.size())) continue;
        for (std::size_t v : layers[static_cast<std::size_t>(k)]) out.push_back(vertex_vector(table.permutation(v)));
    }
    return out;
}

void record(SpanLemmaReport& report, const MembershipVerdict& verdict, const Permutation& sample)
{
    ++report.samples;
    if (!verdict.member) {
        ++report.inconclusive;
    } else if (*verdict.member) {
        ++report.members;
        return;
    } else {
        ++report.non_members;
    }
    if (report.failures.size() < kMaxReportedFailures) report.failures.push_back(sample);
}

SpanLemmaReport sample_layer(const VertexTable& table, const std::vector<std::vector<std::size_t>>& layers,
                             int k, const std::vector<int>& generator_ks, SpanLemmaReport report,
                             std::size_t samples, const RankOptions& options)
{
    report.requested = samples;
    const auto& pool = layers[static_cast<std::size_t>(k)];
    if (pool.empty()) return report;
    const auto gens = layer_vectors(table, layers, generator_ks);
    report.generators = gens.size();
    const SpanChecker checker(gens, coordinate_count(table.n()), options);
    report.generator_rank = checker.generator_rank();

    std::mt19937_64 rng(report.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::set<std::size_t> distinct;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t v = pool[pick(rng)];
        distinct.insert(v);
        record(report, checker.contains(vertex_vector(table.permutation(v))), table.permutation(v));
    }
    report.distinct_targets = distinct.size();
    return report;
}

}  // namespace

SpanLemmaReport check_lemma_high_layers(const VertexTable& table, const Pattern& pattern, int k,
                                        std::size_t samples, std::uint64_t seed, const RankOptions& options)
{
    if (k < 4 || k > static_cast<int>(pattern.size())) {
        throw std::invalid_argument("high-layer span lemma needs 4 <= k <= m, got k = " + std::to_string(k));
    }
    SpanLemmaReport report;
    report.lemma = "high-layers";
    report.k = k;
    report.seed = seed;
    return sample_layer(table, split_by_matches(table, pattern), k, {k - 1, k - 2, k - 3, k - 4}, report,
                        samples, options);
}

SpanLemmaReport check_lemma_third_layer(const VertexTable& table, const Pattern& pattern, std::size_t samples,
                                        std::uint64_t seed, const RankOptions& options)
{
    if (pattern.size() < 3) throw std::invalid_argument("third-layer span lemma needs m >= 3");
    SpanLemmaReport report;
    report.lemma = "third-layer";
    report.seed = seed;
    return sample_layer(table, split_by_matches(table, pattern), 3, {0, 1, 2}, report, samples, options);
}

SpanLemmaReport check_lemma_s0_differences(const VertexTable& table, const Pattern& pattern, std::size_t samples,
                                           std::uint64_t seed, const RankOptions& options)
{
    const auto layers = split_by_matches(table, pattern);
    SpanLemmaReport report;
    report.lemma = "s0-differences";
    report.seed = seed;
    report.requested = samples;
    const auto& s0 = layers.front();
    if (s0.empty()) return report;

    const auto gens = layer_vectors(table, layers, {1, 2});
    report.generators = gens.size();
    const SpanChecker checker(gens, coordinate_count(table.n()), options);
    report.generator_rank = checker.generator_rank();

    const int n = table.n();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, s0.size() - 1);
    std::set<std::pair<std::size_t, std::pair<int, int>>> distinct;
    std::size_t attempts = 0;
    while (report.samples < samples && attempts++ < 100 * samples) {
        const std::size_t v = s0[pick(rng)];
        const Permutation& sigma = table.permutation(v);
        std::vector<std::pair<int, int>> moves;
        for (int x = 1; x <= n; ++x) {
            for (int y = x + 1; y <= n; ++y) {
                if (classify_vertex(apply_transposition(sigma, x, y), pattern) == 0) moves.emplace_back(x, y);
            }
        }
        if (moves.empty()) continue;
        const auto move = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        distinct.insert({v, move});
        const SparseVector diff =
            add_scaled(vertex_vector(sigma), vertex_vector(apply_transposition(sigma, move.first, move.second)), -1);
        record(report, checker.contains(diff), sigma);
    }
    report.distinct_targets = distinct.size();
    return report;
}

}  // namespace qapf
