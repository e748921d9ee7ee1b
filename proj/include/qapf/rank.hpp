#pragma once

// Exact rank and span membership over integer sparse vectors.
//
// Ranks are computed modulo several random primes in (2^30, 2^31). A modular rank
// never exceeds the rational rank, and the primes either agree or the report says
// "inconclusive". With `certify` the same elimination also runs over the rationals.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qapf/vertex.hpp"

namespace qapf {

struct RankOptions {
    int primes = 3;
    int escalation_primes = 5;  // total used after a disagreement
    std::uint64_t seed = 0x5eedULL;
    bool certify = false;
};

struct PrimeRank {
    std::uint64_t prime = 0;
    std::size_t rank = 0;
};

struct RankReport {
    std::size_t rowCount = 0;
    std::size_t columnDimension = 0;
    std::vector<PrimeRank> ranks;
    std::optional<std::size_t> consensusRank;  // set only when every prime agrees
    std::optional<std::size_t> rationalRank;   // set by certify runs
    bool escalated = false;

    /// Consensus rank, agreeing with the rational rank when one was computed.
    bool conclusive() const
    {
        return consensusRank && (!rationalRank || *rationalRank == *consensusRank);
    }
};

bool is_prime(std::uint64_t x);

/// `count` distinct primes in (2^30, 2^31), reproducible from `seed`.
std::vector<std::uint64_t> choose_primes(int count, std::uint64_t seed);

/// Rank of the rows, each a sparse vector over [0, columnDimension).
RankReport rank_of(const std::vector<SparseVector>& rows, std::size_t columnDimension,
                   const RankOptions& options = {});

/// Affine dimension of a nonempty point set: rank of the rows homogenized with a
/// trailing 1, minus one. The report's ranks are homogenized ranks.
struct AffineDimension {
    RankReport report;
    std::optional<std::size_t> dimension;
};
AffineDimension affine_dimension(const std::vector<SparseVector>& points, std::size_t columnDimension,
                                 const RankOptions& options = {});

struct MembershipVerdict {
    std::vector<std::pair<std::uint64_t, bool>> perPrime;
    std::optional<bool> rational;  // certify runs only
    std::optional<bool> member;    // unset when the primes disagree
    bool escalated = false;
};

/// Decides whether targets lie in the linear span of a fixed generator set.
/// Bases are built once per prime; each query reduces against all of them. A query on
/// which the primes disagree adds escalation primes, so queries must not run concurrently.
class SpanChecker {
public:
    SpanChecker(const std::vector<SparseVector>& generators, std::size_t columnDimension,
                const RankOptions& options = {});
    ~SpanChecker();
    SpanChecker(SpanChecker&&) noexcept;
    SpanChecker& operator=(SpanChecker&&) noexcept;

    MembershipVerdict contains(const SparseVector& target) const;
    const RankReport& generator_rank() const { return report_; }

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    RankReport report_;
};

}  // namespace qapf
