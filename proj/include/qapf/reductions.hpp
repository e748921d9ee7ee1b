#pragma once

// Max-clique to membership reductions for QAP1, QAP2 and QAP4, a brute-force
// membership oracle over enumerated families, and the clique extraction sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qapf/families.hpp"
#include "qapf/graph.hpp"
#include "qapf/kernels.hpp"
#include "qapf/ypoint.hpp"

namespace qapf {

/// Point for QAP1 around the special pair (k,l). Entries: n^2 on the diagonal except
/// t at (kl,kl); 1 between (kl) and any (ij) with i != k, j != l; otherwise 0 on
/// edges of the blown-up graph and n on non-edges. Cells with i = k xor j = l against
/// (kl) are not covered by the construction and stay 0. Unscaled; the provenance
/// records the factor 1/n^2 that maps it into [0,1].
YPoint build_point_qap1(const Graph& g, int k, int l, int t);

/// Point for QAP2: 0 on edges, n^2 on non-edges (i1 != i2), 1/t on the diagonal cells
/// (i1, 1), 0 on the remaining diagonal and uncovered cells. Requires 1 <= t <= n-4.
YPoint build_point_qap2(const Graph& g, int t);

/// Point for QAP4: 0 on edges, n/6 on non-edges (i1 != i2), 1/t on the diagonal,
/// 0 elsewhere. Requires t >= 6 and n >= 7.
YPoint build_point_qap4(const Graph& g, int t);

/// Every form of one family at one n, packed for sweeping, with the parameters
/// needed to rebuild any form as a witness.
struct FormCatalog {
    Family family = Family::Qap1;
    int n = 0;
    FormBatch batch{0};
    std::vector<FamilyParams> params;
    std::string note;
};

/// Built once per (n, family, bounds) and cached for the process lifetime.
const FormCatalog& form_catalog(int n, Family family, const EnumerationBounds& bounds = {});

struct MembershipResult {
    bool member = true;
    std::uint64_t forms_checked = 0;
    std::optional<std::uint64_t> witness_id;  // lowest violated form id
    std::optional<LinearForm> witness;
    std::optional<Evaluation> witness_evaluation;  // exact, confirms the violation
};

/// Tests y against every enumerated form of a family in QAP1..QAP4.
MembershipResult brute_force_membership(const YPoint& y, Family family, const EnumerationBounds& bounds = {});

struct OracleOptions {
    /// Pad the graph with isolated vertices up to this size (at least the family minimum:
    /// 6 for QAP1, 7 for QAP2 and QAP4).
    std::optional<int> pad_to;
    /// Evaluate every t instead of stopping at the first feasible one.
    bool full_sweep = false;
    /// Passed to every membership call; the cap applies to the padded size.
    EnumerationBounds bounds;
};

struct OracleCall {
    int k = 0;  // QAP1 only
    int l = 0;
    int t = 0;
    bool member = false;
    std::optional<std::uint64_t> witness_id;
};

struct OracleResult {
    Family family = Family::Qap1;
    int original_n = 0;
    int padded_n = 0;
    int clique_number = 0;
    /// "membership" when the sweep pinned the value; "direct-small" / "direct-large" when
    /// the proof's polynomial side check decided it.
    std::string decided_by;
    std::vector<OracleCall> calls;
};

/// Clique number through build-point plus brute-force membership sweeps over t, following
/// each reduction's extraction rule. Throws std::invalid_argument on excluded instances.
OracleResult clique_via_membership_oracle(const Graph& g, Family family, const OracleOptions& options = {});

/// Smallest padded size each reduction accepts.
int reduction_minimum_n(Family family);

}  // namespace qapf
