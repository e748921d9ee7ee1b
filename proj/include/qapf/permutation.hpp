#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qapf {

/// Default ceiling on n for anything that walks all of S_n.
inline constexpr int kDefaultEnumerationCap = 9;

/// A position/value pair (i, j) of an n x n assignment, both 1-based.
struct PairIndex {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(PairIndex, PairIndex) = default;
    friend constexpr auto operator<=>(PairIndex, PairIndex) = default;
};

/// Row-major linearization n*(i-1)+j; the result is 1-based in [1, n*n].
constexpr int flat_index(int n, PairIndex p) { return n * (p.i - 1) + p.j; }

constexpr PairIndex pair_from_flat(int n, int flat)
{
    return PairIndex{(flat - 1) / n + 1, (flat - 1) % n + 1};
}

/// A bijection on {1, ..., n}. Immutable once constructed.
class Permutation {
public:
    /// Throws std::invalid_argument unless `image` is a bijection on [n].
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    /// "3 1 2" -> sigma(1)=3, sigma(2)=1, sigma(3)=2.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> image() const { return image_; }

    bool maps(PairIndex p) const { return (*this)(p.i) == p.j; }

    /// +1 for even permutations, -1 for odd.
    int sign() const;
    Permutation inverse() const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b)
    {
        return a.image_ <=> b.image_;
    }

private:
    std::vector<int> image_;
};

/// Swaps the images at positions x and y. Rejects x == y and out-of-range positions.
Permutation apply_transposition(const Permutation& sigma, int x, int y);

std::uint64_t factorial(int n);

/// Throws std::invalid_argument naming the cap when n is outside [1, cap].
void check_enumeration_cap(int n, int cap);

/// The permutation of rank `index` in lexicographic order of the image sequence.
Permutation permutation_at(int n, std::uint64_t index);

/// Visits all n! permutations in lexicographic order; stop early by returning false.
void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit,
                          int cap = kDefaultEnumerationCap);

std::vector<Permutation> all_permutations(int n, int cap = kDefaultEnumerationCap);

}  // namespace qapf
