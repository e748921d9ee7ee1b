#include "qapf/rank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qapf/rational.hpp"

namespace qapf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

struct ModField {
    using T = std::uint32_t;
    std::uint64_t p;

    T from(std::int64_t x) const
    {
        const auto sp = static_cast<std::int64_t>(p);
        return static_cast<T>(((x % sp) + sp) % sp);
    }
    static bool is_zero(T x) { return x == 0; }
    T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }
    T inv(T a) const { return static_cast<T>(powmod(a, p - 2, p)); }
    // row -= f * b
    void sub_scaled(std::vector<T>& row, T f, const std::vector<T>& b) const
    {
        const std::uint64_t g = p - f;
        const std::size_t n = row.size();
        for (std::size_t c = 0; c < n; ++c) row[c] = static_cast<T>((row[c] + g * b[c]) % p);
    }
};

struct RationalField {
    using T = Rational;

    static T from(std::int64_t x) { return T(x); }
    static bool is_zero(const T& x) { return x == 0; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T inv(const T& a) { return 1 / a; }
    static void sub_scaled(std::vector<T>& row, const T& f, const std::vector<T>& b)
    {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (b[c] != 0) row[c] -= f * b[c];
        }
    }
};

/// Fully reduced row echelon basis: each basis row is zero at every other pivot column,
/// so reducing a sparse vector only touches the basis rows of its own support.
template <class Field>
class EchelonBasis {
public:
    using T = typename Field::T;

    EchelonBasis(Field field, std::size_t columns)
        : field_(field), columns_(columns), row_of_column_(columns, -1)
    {
    }

    std::size_t rank() const { return rows_.size(); }

    bool insert(const SparseVector& v)
    {
        std::vector<T> dense = reduce(v);
        std::size_t c = 0;
        while (c < columns_ && Field::is_zero(dense[c])) ++c;
        if (c == columns_) return false;
        const T scale = field_.inv(dense[c]);
        for (auto& x : dense) {
            if (!Field::is_zero(x)) x = field_.mul(x, scale);
        }
        for (auto& row : rows_) {
            if (!Field::is_zero(row[c])) {
                const T f = row[c];
                field_.sub_scaled(row, f, dense);
            }
        }
        row_of_column_[c] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(dense));
        return true;
    }

    bool in_span(const SparseVector& v) const
    {
        const std::vector<T> dense = reduce(v);
        return std::all_of(dense.begin(), dense.end(), [](const T& x) { return Field::is_zero(x); });
    }

private:
    std::vector<T> reduce(const SparseVector& v) const
    {
        std::vector<T> dense(columns_, field_.from(0));
        for (const auto& [c, x] : v) dense[c] = field_.from(x);
        for (const auto& [c, x] : v) {
            const std::int32_t r = row_of_column_[c];
            if (r < 0 || Field::is_zero(dense[c])) continue;
            const T f = dense[c];
            field_.sub_scaled(dense, f, rows_[static_cast<std::size_t>(r)]);
        }
        return dense;
    }

    Field field_;
    std::size_t columns_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::int32_t> row_of_column_;
};

/// Renumbers the columns used by a set of rows to [0, used).
class ColumnMap {
public:
    explicit ColumnMap(const std::vector<SparseVector>& rows)
    {
        for (const auto& r : rows) {
            for (const auto& [c, x] : r) {
                if (x != 0) used_.push_back(c);
            }
        }
        std::sort(used_.begin(), used_.end());
        used_.erase(std::unique(used_.begin(), used_.end()), used_.end());
    }

    std::size_t size() const { return used_.size(); }

    /// Empty optional when v is nonzero on a column no row uses.
    std::optional<SparseVector> compress(const SparseVector& v) const
    {
        SparseVector out;
        out.reserve(v.size());
        for (const auto& [c, x] : v) {
            if (x == 0) continue;
            const auto it = std::lower_bound(used_.begin(), used_.end(), c);
            if (it == used_.end() || *it != c) return std::nullopt;
            out.emplace_back(static_cast<std::size_t>(it - used_.begin()), x);
        }
        return out;
    }

private:
    std::vector<std::size_t> used_;
};

std::vector<SparseVector> compress_all(const ColumnMap& map, const std::vector<SparseVector>& rows)
{
    std::vector<SparseVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(*map.compress(r));
    return out;
}

template <class Field>
EchelonBasis<Field> build_basis(Field field, std::size_t columns, const std::vector<SparseVector>& rows)
{
    EchelonBasis<Field> basis(field, columns);
    for (const auto& r : rows) basis.insert(r);
    return basis;
}

std::vector<EchelonBasis<ModField>> modular_bases(const std::vector<std::uint64_t>& primes,
                                                  std::size_t columns,
                                                  const std::vector<SparseVector>& rows)
{
    std::vector<std::optional<EchelonBasis<ModField>>> slots(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(primes.size()); ++i) {
        const auto u = static_cast<std::size_t>(i);
        slots[u].emplace(build_basis(ModField{primes[u]}, columns, rows));
    }
    std::vector<EchelonBasis<ModField>> out;
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void validate_rows(const std::vector<SparseVector>& rows, std::size_t columnDimension)
{
    for (const auto& r : rows) {
        for (const auto& [c, x] : r) {
            (void)x;
            if (c >= columnDimension) throw std::invalid_argument("rank: vector coordinate outside the column dimension");
        }
    }
}

bool all_equal_ranks(const std::vector<PrimeRank>& ranks)
{
    return std::all_of(ranks.begin(), ranks.end(), [&](const PrimeRank& r) { return r.rank == ranks.front().rank; });
}

}  // namespace

bool is_prime(std::uint64_t x)
{
    if (x < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t y = powmod(a, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> choose_primes(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick((1ULL << 30) + 1, (1ULL << 31) - 1);
    std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        const std::uint64_t c = pick(rng);
        if (is_prime(c) && std::find(primes.begin(), primes.end(), c) == primes.end()) primes.push_back(c);
    }
    return primes;
}

RankReport rank_of(const std::vector<SparseVector>& rows, std::size_t columnDimension,
                   const RankOptions& options)
{
    validate_rows(rows, columnDimension);
    const ColumnMap map(rows);
    const auto compressed = compress_all(map, rows);

    RankReport report;
    report.rowCount = rows.size();
    report.columnDimension = columnDimension;

    auto run = [&](const std::vector<std::uint64_t>& primes) {
        report.ranks.clear();
        const auto bases = modular_bases(primes, map.size(), compressed);
        for (std::size_t i = 0; i < primes.size(); ++i) report.ranks.push_back({primes[i], bases[i].rank()});
    };
    run(choose_primes(options.primes, options.seed));
    if (!all_equal_ranks(report.ranks) && options.escalation_primes > options.primes) {
        report.escalated = true;
        run(choose_primes(options.escalation_primes, options.seed));
    }
    if (all_equal_ranks(report.ranks) && !report.ranks.empty()) report.consensusRank = report.ranks.front().rank;
    if (options.certify) report.rationalRank = build_basis(RationalField{}, map.size(), compressed).rank();
    return report;
}

AffineDimension affine_dimension(const std::vector<SparseVector>& points, std::size_t columnDimension,
                                 const RankOptions& options)
{
    if (points.empty()) throw std::invalid_argument("affine_dim: empty point set");
    std::vector<SparseVector> homogenized;
    homogenized.reserve(points.size());
    for (const auto& p : points) {
        SparseVector h = p;
        h.emplace_back(columnDimension, 1);
        homogenized.push_back(std::move(h));
    }
    AffineDimension out{rank_of(homogenized, columnDimension + 1, options), std::nullopt};
    out.report.columnDimension = columnDimension;
    if (out.report.conclusive()) out.dimension = *out.report.consensusRank - 1;
    return out;
}

struct SpanChecker::Impl {
    RankOptions options;
    ColumnMap map;
    std::vector<SparseVector> generators;
    std::vector<std::uint64_t> primes;
    std::vector<EchelonBasis<ModField>> bases;
    std::optional<EchelonBasis<RationalField>> rational;

    Impl(const std::vector<SparseVector>& gens, const RankOptions& opts)
        : options(opts), map(gens), generators(compress_all(map, gens))
    {
    }

    void escalate()
    {
        const auto all = choose_primes(std::max(options.escalation_primes, options.primes), options.seed);
        const std::vector<std::uint64_t> extra(all.begin() + static_cast<std::ptrdiff_t>(primes.size()), all.end());
        auto more = modular_bases(extra, map.size(), generators);
        for (std::size_t i = 0; i < extra.size(); ++i) {
            primes.push_back(extra[i]);
            bases.push_back(std::move(more[i]));
        }
    }
};

SpanChecker::SpanChecker(const std::vector<SparseVector>& generators, std::size_t columnDimension,
                         const RankOptions& options)
{
    validate_rows(generators, columnDimension);
    impl_ = std::make_unique<Impl>(generators, options);
    impl_->primes = choose_primes(options.primes, options.seed);
    impl_->bases = modular_bases(impl_->primes, impl_->map.size(), impl_->generators);
    if (options.certify) impl_->rational.emplace(build_basis(RationalField{}, impl_->map.size(), impl_->generators));

    report_.rowCount = generators.size();
    report_.columnDimension = columnDimension;
    for (std::size_t i = 0; i < impl_->primes.size(); ++i) report_.ranks.push_back({impl_->primes[i], impl_->bases[i].rank()});
    if (!all_equal_ranks(report_.ranks) && options.escalation_primes > options.primes) {
        report_.escalated = true;
        impl_->escalate();
        report_.ranks.clear();
        for (std::size_t i = 0; i < impl_->primes.size(); ++i) report_.ranks.push_back({impl_->primes[i], impl_->bases[i].rank()});
    }
    if (all_equal_ranks(report_.ranks)) report_.consensusRank = report_.ranks.front().rank;
    if (impl_->rational) report_.rationalRank = impl_->rational->rank();
}

SpanChecker::~SpanChecker() = default;
SpanChecker::SpanChecker(SpanChecker&&) noexcept = default;
SpanChecker& SpanChecker::operator=(SpanChecker&&) noexcept = default;

MembershipVerdict SpanChecker::contains(const SparseVector& target) const
{
    MembershipVerdict verdict;
    const auto compressed = impl_->map.compress(target);
    auto decide = [&] {
        verdict.perPrime.clear();
        for (std::size_t i = 0; i < impl_->primes.size(); ++i) {
            verdict.perPrime.emplace_back(impl_->primes[i], compressed && impl_->bases[i].in_span(*compressed));
        }
        const bool first = verdict.perPrime.front().second;
        return std::all_of(verdict.perPrime.begin(), verdict.perPrime.end(),
                           [&](const auto& pr) { return pr.second == first; });
    };
    bool agree = decide();
    if (!agree && impl_->options.escalation_primes > static_cast<int>(impl_->primes.size())) {
        impl_->escalate();
        verdict.escalated = true;
        agree = decide();
    }
    if (impl_->rational) verdict.rational = compressed && impl_->rational->in_span(*compressed);
    if (agree && (!verdict.rational || *verdict.rational == verdict.perPrime.front().second)) {
        verdict.member = verdict.perPrime.front().second;
    }
    return verdict;
}

}  // namespace qapf
