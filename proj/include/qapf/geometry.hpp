#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qapf/kernels.hpp"
#include "qapf/linear_form.hpp"
#include "qapf/rank.hpp"
#include "qapf/vertex.hpp"

namespace qapf {

/// Designated pairs (i_r, j_r); S_k holds the vertices matching exactly k of them.
using Pattern = std::vector<PairIndex>;

/// Throws std::invalid_argument on repeated i's or j's, or indices outside [n].
void validate_pattern(int n, const Pattern& pattern);
/// (1,1), ..., (m,m).
Pattern diagonal_pattern(int m);

int classify_vertex(const Permutation& sigma, const Pattern& pattern);

/// Vertex indices of the table grouped by k = 0..pattern.size().
std::vector<std::vector<std::size_t>> split_by_matches(const VertexTable& table, const Pattern& pattern);

/// Upper-triangular coordinates of the vertex of sigma.
SparseVector vertex_vector(const Permutation& sigma);

/// Affine dimension of all vertices at table.n(); cached per (n, rank options).
const AffineDimension& polytope_dimension(const VertexTable& table, const RankOptions& options = {});

AffineDimension vertex_set_dimension(const VertexTable& table, const std::vector<std::size_t>& members,
                                     const RankOptions& options = {});

struct FacetVerdict {
    bool valid = false;
    std::optional<Permutation> violating;  // first vertex with negative slack
    Rational violating_slack;
    std::size_t tight_count = 0;
    std::optional<AffineDimension> tight;
    std::optional<AffineDimension> polytope;
    bool facet = false;
    bool inconclusive = false;

    /// "facet", "not facet", "invalid" or "inconclusive".
    std::string label() const;
};

/// Validity over all vertices first; then facet iff dim(tight set) = dim(polytope) - 1.
FacetVerdict verify_facet(const LinearForm& form, const VertexTable& table,
                          const RankOptions& options = {}, KernelMode mode = KernelMode::Parallel);

struct EqualityClassRow {
    int k = 0;
    std::size_t vertices = 0;
    std::size_t tight = 0;
    Rational min_slack;
    Rational max_slack;
};

struct EqualitySetReport {
    std::vector<EqualityClassRow> rows;
    std::size_t mismatches = 0;  // tight but k not in {1,2}, or k in {1,2} but not tight
    bool passed() const { return mismatches == 0; }
};

/// Exhaustive check that the tight vertices of the QAP4 form are exactly S_1 and S_2.
EqualitySetReport check_equality_set(const Qap4Params& params, const VertexTable& table);

struct Identity1Report {
    std::array<int, 3> moved{};  // the three positions where the six permutations differ
    int x = 0;
    int y = 0;
    std::size_t nonzero_cells = 0;
    bool zero() const { return nonzero_cells == 0; }
};

/// The six permutations that agree with `base` outside `moved` and permute its values there.
std::vector<Permutation> identity1_family(const Permutation& base, const std::array<int, 3>& moved);

/// The twelve signed terms: each sigma with sign(sigma), then each sigma swapped at (x, y).
/// Throws std::invalid_argument on any precondition violation, naming the offending index.
std::vector<std::pair<int, Permutation>> identity1_terms(const std::vector<Permutation>& sigmas, int x, int y);

Identity1Report check_identity1(const std::vector<Permutation>& sigmas, int x, int y);

/// One nonzero cell of the identity2 difference: row (a,b), column (x,y), value sign.
struct PatternCell {
    PairIndex row;
    PairIndex col;
    int sign = 0;

    friend auto operator<=>(const PatternCell&, const PatternCell&) = default;
};

struct Identity2Report {
    std::size_t nonzeros = 0;
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::set<int> affected_flats;
    std::set<PatternCell> cells;  // full-matrix cells, both orientations
};

/// sigma_2 = sigma_1 swapped at (i,j), sigma_3 = sigma_2 at (i',j'), sigma_4 = sigma_3 at (i,j).
std::array<Permutation, 4> identity2_chain(const Permutation& sigma1, int i, int j, int ip, int jp);

/// Nonzero census of (P1 - P2) - (P4 - P3). Requires i' and j' outside {i, j}.
Identity2Report check_identity2(const std::array<Permutation, 4>& chain, int i, int j, int ip, int jp);

struct ConnectivityReport {
    std::size_t s0_size = 0;
    std::size_t edges = 0;
    std::size_t components = 0;

    bool vacuous() const { return s0_size == 0; }
    bool connected() const { return components == 1; }
};

/// Components of the graph on S_0 whose edges join permutations one transposition apart.
ConnectivityReport check_s0_connectivity(const VertexTable& table, const Pattern& pattern);

/// Exact span membership of a target against a generator set at the given n.
MembershipVerdict check_span_membership(const SparseVector& target, const std::vector<SparseVector>& generators,
                                        int n, const RankOptions& options = {});

struct SpanLemmaReport {
    std::string lemma;
    std::optional<int> k;  // the S_k sampled by the S_k >= 4 lemma
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    std::size_t samples = 0;  // 0 when the sampled set is empty
    std::size_t distinct_targets = 0;
    std::size_t members = 0;
    std::size_t non_members = 0;
    std::size_t inconclusive = 0;
    std::size_t generators = 0;
    RankReport generator_rank;
    std::vector<Permutation> failures;  // first few offending sample permutations

    bool vacuous() const { return samples == 0; }
    bool passed() const { return non_members == 0 && inconclusive == 0; }
};

/// Samples sigma in S_k (k >= 4) and tests it against span(S_{k-1} .. S_{k-4}).
SpanLemmaReport check_lemma_high_layers(const VertexTable& table, const Pattern& pattern, int k,
                                        std::size_t samples, std::uint64_t seed,
                                        const RankOptions& options = {});
/// Samples sigma in S_3 and tests it against span(S_0, S_1, S_2).
SpanLemmaReport check_lemma_third_layer(const VertexTable& table, const Pattern& pattern,
                                        std::size_t samples, std::uint64_t seed,
                                        const RankOptions& options = {});
/// Samples adjacent sigma, sigma' in S_0 and tests P_sigma - P_sigma' against span(S_1, S_2).
SpanLemmaReport check_lemma_s0_differences(const VertexTable& table, const Pattern& pattern,
                                           std::size_t samples, std::uint64_t seed,
                                           const RankOptions& options = {});

}  // namespace qapf
