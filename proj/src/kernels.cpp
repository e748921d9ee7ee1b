#include "qapf/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "qapf/families.hpp"

namespace qapf {

VertexTable::VertexTable(int n, int cap) : n_(n), perms_(all_permutations(n, cap))
{
    const std::size_t count = perms_.size();
    matched_.assign(static_cast<std::size_t>(n * n) * count, 0);
    for (std::size_t v = 0; v < count; ++v) {
        for (int i = 1; i <= n; ++i) {
            const int flat = flat_index(n, {i, perms_[v](i)});
            matched_[static_cast<std::size_t>(flat - 1) * count + v] = 1;
        }
    }
}

std::span<const std::uint8_t> VertexTable::matched(int flat) const
{
    if (flat < 1 || flat > n_ * n_) throw std::out_of_range("VertexTable::matched: bad flat index");
    return {matched_.data() + static_cast<std::size_t>(flat - 1) * size(), size()};
}

void FormBatch::add(const LinearForm& form)
{
    if (form.n() != n_) throw std::invalid_argument("FormBatch: form size differs from batch size");
    auto narrow = [](std::int64_t c) {
        if (c < std::numeric_limits<std::int32_t>::min() || c > std::numeric_limits<std::int32_t>::max()) {
            throw std::overflow_error("FormBatch: coefficient does not fit 32 bits");
        }
        return static_cast<std::int32_t>(c);
    };
    for (const auto& t : form.diag()) {
        coords_.push_back(static_cast<std::uint32_t>(coordinate_of(n_, UPair{t.flat, t.flat})));
        coefs_.push_back(narrow(t.coef));
    }
    for (const auto& t : form.offdiag()) {
        coords_.push_back(static_cast<std::uint32_t>(coordinate_of(n_, t.cell)));
        coefs_.push_back(narrow(t.coef));
    }
    offsets_.push_back(coords_.size());
    rhs_.push_back(form.rhs());
    less_equal_.push_back(form.sense() == Sense::LessEqual ? 1 : 0);
}

DenseEvaluation FormBatch::evaluate(std::size_t f, const DenseYPoint& y) const
{
    __int128 lhs = 0;
    for (std::size_t t = offsets_[f]; t < offsets_[f + 1]; ++t) {
        lhs += static_cast<__int128>(coefs_[t]) * y.numerators[coords_[t]];
    }
    const __int128 rhs = static_cast<__int128>(rhs_[f]) * y.denominator;
    return {static_cast<std::int64_t>(lhs), less_equal_[f] ? lhs <= rhs : lhs >= rhs};
}

namespace {

void check_sizes(int form_n, const VertexTable& table, std::size_t out_size)
{
    if (form_n != table.n()) throw std::invalid_argument("kernel: form and vertex table sizes differ");
    if (out_size != table.size()) throw std::invalid_argument("kernel: output span has the wrong length");
}

constexpr std::ptrdiff_t kBlock = 512;

std::ptrdiff_t block_count(std::size_t total)
{
    return static_cast<std::ptrdiff_t>((total + kBlock - 1) / kBlock);
}

// acc[v] += coef * matched(flat)[v] over several flats.
void accumulate_rows(const VertexTable& table, const std::vector<int>& flats, std::int64_t coef,
                     std::int64_t* acc, std::ptrdiff_t lo, std::ptrdiff_t hi)
{
    for (int flat : flats) {
        const std::uint8_t* m = table.matched(flat).data();
        for (std::ptrdiff_t v = lo; v < hi; ++v) acc[v] += coef * m[v];
    }
}

std::vector<int> block_flats(int n, const std::vector<int>& rows, const std::vector<int>& cols)
{
    std::vector<int> flats;
    for (int i : rows) {
        for (int j : cols) flats.push_back(flat_index(n, {i, j}));
    }
    return flats;
}

}  // namespace

namespace serial {

void lhs_over_vertices(const LinearForm& form, const VertexTable& table,
                       std::span<std::int64_t> out)
{
    check_sizes(form.n(), table, out.size());
    for (std::size_t v = 0; v < table.size(); ++v) out[v] = lhs_at_vertex(form, table.permutation(v));
}

void closed_slack_over_vertices(const FamilyParams& params, const VertexTable& table,
                                std::span<std::int64_t> out)
{
    check_sizes(size_of(params), table, out.size());
    for (std::size_t v = 0; v < table.size(); ++v) {
        out[v] = closed_form_slack_doubled(params, qstats(params, table.permutation(v)));
    }
}

std::optional<ViolationHit> first_violation(std::span<const LinearForm> forms, const DenseYPoint& y)
{
    for (std::size_t f = 0; f < forms.size(); ++f) {
        const DenseEvaluation e = evaluate_dense(forms[f], y);
        if (!e.satisfied) return ViolationHit{f, e.lhs_numerator};
    }
    return std::nullopt;
}

}  // namespace serial

namespace parallel {

void lhs_over_vertices(const LinearForm& form, const VertexTable& table,
                       std::span<std::int64_t> out)
{
    check_sizes(form.n(), table, out.size());
    const std::size_t total = table.size();
    std::int64_t* acc = out.data();
    const auto& diag = form.diag();
    const auto& off = form.offdiag();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < block_count(total); ++b) {
        const std::ptrdiff_t lo = b * kBlock;
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(lo + kBlock, static_cast<std::ptrdiff_t>(total));
        for (std::ptrdiff_t v = lo; v < hi; ++v) acc[v] = 0;
        for (const auto& t : diag) {
            const std::uint8_t* m = table.matched(t.flat).data();
            const std::int64_t c = t.coef;
            for (std::ptrdiff_t v = lo; v < hi; ++v) acc[v] += c * m[v];
        }
        for (const auto& t : off) {
            const std::uint8_t* ma = table.matched(t.cell.a).data();
            const std::uint8_t* mb = table.matched(t.cell.b).data();
            const std::int64_t c = t.coef;
            for (std::ptrdiff_t v = lo; v < hi; ++v) acc[v] += c * (ma[v] & mb[v]);
        }
    }
}

void closed_slack_over_vertices(const FamilyParams& params, const VertexTable& table,
                                std::span<std::int64_t> out)
{
    check_sizes(size_of(params), table, out.size());
    const int n = table.n();
    const std::size_t total = table.size();
    std::int64_t* d = out.data();

    // Two count rows are enough for every family; the meaning of each depends on it.
    std::vector<int> first_flats;
    std::vector<int> second_flats;
    std::int64_t beta = 0;
    std::vector<std::pair<int, std::int64_t>> weighted;  // QAP5
    const Family family = family_of(params);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Qap1Params> || std::is_same_v<T, Qap4Params>) {
                for (std::size_t r = 0; r < p.iSet.size(); ++r) {
                    first_flats.push_back(flat_index(n, {p.iSet[r], p.jSet[r]}));
                }
                if constexpr (std::is_same_v<T, Qap1Params>) second_flats.push_back(flat_index(n, {p.k, p.l}));
            } else if constexpr (std::is_same_v<T, Qap2Params>) {
                first_flats = block_flats(n, p.P, p.Q);
                beta = p.beta;
            } else if constexpr (std::is_same_v<T, Qap3Params>) {
                first_flats = block_flats(n, p.P1, p.Q);
                second_flats = block_flats(n, p.P2, p.Q);
                beta = p.beta;
            } else {
                for (const auto& [ij, c] : p.coeffs) {
                    if (c != 0) weighted.emplace_back(flat_index(n, ij), c);
                }
                beta = p.beta;
            }
        },
        params);

#pragma omp parallel
    {
        std::vector<std::int64_t> a(static_cast<std::size_t>(kBlock));
        std::vector<std::int64_t> b(static_cast<std::size_t>(kBlock));
#pragma omp for schedule(static)
        for (std::ptrdiff_t blk = 0; blk < block_count(total); ++blk) {
            const std::ptrdiff_t lo = blk * kBlock;
            const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(lo + kBlock, static_cast<std::ptrdiff_t>(total));
            std::int64_t* qa = a.data() - lo;
            std::int64_t* qb = b.data() - lo;
            for (std::ptrdiff_t v = lo; v < hi; ++v) qa[v] = qb[v] = 0;
            accumulate_rows(table, first_flats, 1, qa, lo, hi);
            accumulate_rows(table, second_flats, 1, qb, lo, hi);
            for (const auto& [flat, c] : weighted) {
                const std::uint8_t* m = table.matched(flat).data();
                for (std::ptrdiff_t v = lo; v < hi; ++v) qa[v] += c * m[v];
            }
            switch (family) {
            case Family::Qap1:
                for (std::ptrdiff_t v = lo; v < hi; ++v) d[v] = doubled_slack::qap1(qa[v], qb[v]);
                break;
            case Family::Qap2:
                for (std::ptrdiff_t v = lo; v < hi; ++v) d[v] = doubled_slack::qap2(qa[v], beta);
                break;
            case Family::Qap3:
                for (std::ptrdiff_t v = lo; v < hi; ++v) d[v] = doubled_slack::qap3(qa[v], qb[v], beta);
                break;
            case Family::Qap4:
                for (std::ptrdiff_t v = lo; v < hi; ++v) d[v] = doubled_slack::qap4(qa[v]);
                break;
            case Family::Qap5:
                for (std::ptrdiff_t v = lo; v < hi; ++v) d[v] = doubled_slack::qap5(qa[v], beta);
                break;
            }
        }
    }
}

std::optional<ViolationHit> first_violation(const FormBatch& forms, const DenseYPoint& y)
{
    if (forms.n() != y.n) throw std::invalid_argument("first_violation: form and point sizes differ");
    const auto none = std::numeric_limits<std::size_t>::max();
    std::size_t best = none;
    const auto count = static_cast<std::ptrdiff_t>(forms.size());
#pragma omp parallel for schedule(dynamic, 1024) reduction(min : best)
    for (std::ptrdiff_t f = 0; f < count; ++f) {
        const auto u = static_cast<std::size_t>(f);
        if (u < best && !forms.evaluate(u, y).satisfied) best = u;
    }
    if (best == none) return std::nullopt;
    return ViolationHit{best, forms.evaluate(best, y).lhs_numerator};
}

}  // namespace parallel

void lhs_over_vertices(KernelMode mode, const LinearForm& form, const VertexTable& table,
                       std::span<std::int64_t> out)
{
    mode == KernelMode::Serial ? serial::lhs_over_vertices(form, table, out)
                               : parallel::lhs_over_vertices(form, table, out);
}

void closed_slack_over_vertices(KernelMode mode, const FamilyParams& params,
                                const VertexTable& table, std::span<std::int64_t> out)
{
    mode == KernelMode::Serial ? serial::closed_slack_over_vertices(params, table, out)
                               : parallel::closed_slack_over_vertices(params, table, out);
}

void set_worker_count(int k)
{
    omp_set_num_threads(k > 0 ? k : omp_get_num_procs());
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace qapf
