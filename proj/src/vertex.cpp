#include "qapf/vertex.hpp"

#include <algorithm>
#include <stdexcept>

namespace qapf {

UPair upair_of_coordinate(int n, std::size_t coordinate)
{
    if (coordinate >= coordinate_count(n)) {
        throw std::out_of_range("coordinate outside the upper-triangular embedding");
    }
    const auto N = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::size_t a0 = 0;
    std::size_t row_start = 0;
    while (row_start + (N - a0) <= coordinate) {
        row_start += N - a0;
        ++a0;
    }
    const std::size_t b0 = a0 + (coordinate - row_start);
    return UPair{static_cast<int>(a0 + 1), static_cast<int>(b0 + 1)};
}

SparseVector add_scaled(const SparseVector& x, const SparseVector& y, std::int64_t factor)
{
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t p = 0;
    std::size_t q = 0;
    while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
            out.push_back(x[p++]);
        } else if (p == x.size() || y[q].first < x[p].first) {
            out.emplace_back(y[q].first, factor * y[q].second);
            ++q;
        } else {
            const std::int64_t v = x[p].second + factor * y[q].second;
            if (v != 0) out.emplace_back(x[p].first, v);
            ++p;
            ++q;
        }
    }
    return out;
}

QapVertex::QapVertex(Permutation sigma) : sigma_(std::move(sigma))
{
    const int n = sigma_.size();
    entries_.reserve(static_cast<std::size_t>(n + n * (n - 1) / 2));
    for (int i = 1; i <= n; ++i) {
        const int a = flat_index(n, {i, sigma_(i)});
        for (int k = i; k <= n; ++k) {
            entries_.push_back(UPair::of(a, flat_index(n, {k, sigma_(k)})));
        }
    }
    std::sort(entries_.begin(), entries_.end());
}

int QapVertex::value(PairIndex x, PairIndex y) const
{
    return sigma_.maps(x) && sigma_.maps(y) ? 1 : 0;
}

int QapVertex::value(UPair cell) const
{
    const int n = this->n();
    return value(pair_from_flat(n, cell.a), pair_from_flat(n, cell.b));
}

SparseVector QapVertex::to_sparse() const
{
    SparseVector out;
    out.reserve(entries_.size());
    for (const UPair& cell : entries_) out.emplace_back(coordinate_of(n(), cell), 1);
    std::sort(out.begin(), out.end());
    return out;
}

QapVertex vertex_from_permutation(const Permutation& sigma) { return QapVertex(sigma); }

std::map<Cell, std::int64_t> signed_vertex_sum(
    const std::vector<std::pair<int, Permutation>>& terms)
{
    std::map<Cell, std::int64_t> sum;
    for (const auto& [sign, sigma] : terms) {
        const int n = sigma.size();
        // full-matrix cells: both orientations of every off-diagonal pair
        for (int i = 1; i <= n; ++i) {
            for (int k = 1; k <= n; ++k) {
                const Cell cell{flat_index(n, {i, sigma(i)}), flat_index(n, {k, sigma(k)})};
                sum[cell] += sign;
            }
        }
    }
    std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
    return sum;
}

}  // namespace qapf
