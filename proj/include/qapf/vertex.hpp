#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "qapf/permutation.hpp"

namespace qapf {

/// Unordered pair of flat indices {a, b} with a <= b; a == b addresses a diagonal cell.
struct UPair {
    int a = 0;
    int b = 0;

    static constexpr UPair of(int x, int y) { return x <= y ? UPair{x, y} : UPair{y, x}; }
    constexpr bool diagonal() const { return a == b; }

    friend constexpr bool operator==(UPair, UPair) = default;
    friend constexpr auto operator<=>(UPair, UPair) = default;
};

/// Ordered cell (row, col) of the full n^2 x n^2 matrix, in flat indices.
struct Cell {
    int row = 0;
    int col = 0;

    friend constexpr bool operator==(Cell, Cell) = default;
    friend constexpr auto operator<=>(Cell, Cell) = default;
};

/// Dimension of the upper-triangular embedding of symmetric n^2 x n^2 matrices.
constexpr std::size_t coordinate_count(int n)
{
    const auto N = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    return N * (N + 1) / 2;
}

/// 0-based coordinate of the cell {a, b} in the upper-triangular embedding.
constexpr std::size_t coordinate_of(int n, UPair p)
{
    const auto N = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    const auto a0 = static_cast<std::size_t>(p.a - 1);
    const auto b0 = static_cast<std::size_t>(p.b - 1);
    const std::size_t row_start = a0 == 0 ? 0 : a0 * N - a0 * (a0 - 1) / 2;
    return row_start + (b0 - a0);
}

UPair upair_of_coordinate(int n, std::size_t coordinate);

/// Integer vector over the upper-triangular coordinates, sorted by coordinate, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, std::int64_t>>;

SparseVector add_scaled(const SparseVector& x, const SparseVector& y, std::int64_t factor);

/// The vertex P^[2]_sigma: entry {(ij),(kl)} is 1 iff sigma(i)=j and sigma(k)=l.
class QapVertex {
public:
    explicit QapVertex(Permutation sigma);

    int n() const { return sigma_.size(); }
    const Permutation& permutation() const { return sigma_; }

    /// Canonical nonzero cells: n diagonal singletons and n(n-1)/2 off-diagonal pairs.
    const std::vector<UPair>& entries() const { return entries_; }

    int value(PairIndex x, PairIndex y) const;
    int value(UPair cell) const;

    SparseVector to_sparse() const;

private:
    Permutation sigma_;
    std::vector<UPair> entries_;
};

QapVertex vertex_from_permutation(const Permutation& sigma);

/// Signed sum of vertices over full-matrix cells; zero entries are dropped.
std::map<Cell, std::int64_t> signed_vertex_sum(
    const std::vector<std::pair<int, Permutation>>& terms);

}  // namespace qapf
