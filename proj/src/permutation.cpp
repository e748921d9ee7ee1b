#include "qapf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qapf {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    const int n = size();
    if (n < 1) {
        throw std::invalid_argument("permutation must have at least one element");
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) {
        const int v = image_[static_cast<std::size_t>(k)];
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " at position " + std::to_string(k + 1) +
                                        " is outside [1, " + std::to_string(n) + "]");
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation is not a bijection: value " +
                                        std::to_string(v) + " repeats");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 1) throw std::invalid_argument("identity permutation needs n >= 1");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<int> image;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            image.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse permutation token '" + token + "'");
        }
    }
    return Permutation(std::move(image));
}

int Permutation::sign() const
{
    // parity from cycle decomposition: an l-cycle contributes l-1 transpositions
    const int n = size();
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    int transpositions = 0;
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int length = 0;
        for (int x = start; !visited[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            visited[static_cast<std::size_t>(x)] = 1;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (k) out.push_back(' ');
        out += std::to_string(image_[k]);
    }
    return out;
}

Permutation apply_transposition(const Permutation& sigma, int x, int y)
{
    const int n = sigma.size();
    if (x < 1 || x > n || y < 1 || y > n) {
        throw std::invalid_argument("transposition indices must lie in [1, " +
                                    std::to_string(n) + "]");
    }
    if (x == y) throw std::invalid_argument("transposition needs two distinct indices");
    std::vector<int> image(sigma.image().begin(), sigma.image().end());
    std::swap(image[static_cast<std::size_t>(x - 1)], image[static_cast<std::size_t>(y - 1)]);
    return Permutation(std::move(image));
}

std::uint64_t factorial(int n)
{
    if (n < 0 || n > 20) throw std::invalid_argument("factorial argument out of range");
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

void check_enumeration_cap(int n, int cap)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > cap) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                    std::to_string(cap));
    }
}

Permutation permutation_at(int n, std::uint64_t index)
{
    if (n < 1 || n > 20) throw std::invalid_argument("permutation_at: n out of range");
    if (index >= factorial(n)) throw std::invalid_argument("permutation_at: index out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> image;
    image.reserve(pool.size());
    for (int k = n; k >= 1; --k) {
        const std::uint64_t block = factorial(k - 1);
        const auto pick = static_cast<std::size_t>(index / block);
        index %= block;
        image.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(image));
}

void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit, int cap)
{
    check_enumeration_cap(n, cap);
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    do {
        if (!visit(Permutation(image))) return;
    } while (std::next_permutation(image.begin(), image.end()));
}

std::vector<Permutation> all_permutations(int n, int cap)
{
    check_enumeration_cap(n, cap);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    for_each_permutation(
        n, [&](const Permutation& p) {
            out.push_back(p);
            return true;
        },
        cap);
    return out;
}

}  // namespace qapf
