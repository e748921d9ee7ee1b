#include "qapf/ypoint.hpp"

#include <limits>
#include <stdexcept>

namespace qapf {

namespace {

void check_flat(int n, int flat)
{
    if (flat < 1 || flat > n * n) {
        throw std::invalid_argument("flat index " + std::to_string(flat) + " outside [1, " +
                                    std::to_string(n * n) + "]");
    }
}

}  // namespace

YPoint::YPoint(int n, std::string provenance) : n_(n), provenance_(std::move(provenance))
{
    if (n < 1) throw std::invalid_argument("YPoint needs n >= 1");
}

YPoint YPoint::from_vertex(const QapVertex& vertex)
{
    YPoint y(vertex.n(), "vertex " + vertex.permutation().to_string());
    for (const UPair& cell : vertex.entries()) y.set(cell, Rational(1));
    return y;
}

void YPoint::set(UPair cell, Rational value)
{
    cell = UPair::of(cell.a, cell.b);
    check_flat(n_, cell.a);
    check_flat(n_, cell.b);
    if (value == 0) {
        values_.erase(cell);
    } else {
        values_[cell] = std::move(value);
    }
}

void YPoint::set(PairIndex x, PairIndex y, Rational value)
{
    set(UPair::of(flat_index(n_, x), flat_index(n_, y)), std::move(value));
}

Rational YPoint::value(UPair cell) const
{
    const auto it = values_.find(UPair::of(cell.a, cell.b));
    return it == values_.end() ? Rational(0) : it->second;
}

Rational YPoint::value(PairIndex x, PairIndex y) const
{
    return value(UPair::of(flat_index(n_, x), flat_index(n_, y)));
}

DenseYPoint densify(const YPoint& y)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using Int = boost::multiprecision::mpz_int;

    Int common = 1;
    for (const auto& [cell, v] : y.values()) {
        const Int d = denominator(v);
        common = common / boost::multiprecision::gcd(common, d) * d;
    }
    const Int limit = Int(std::numeric_limits<std::int64_t>::max());
    if (common > limit) throw std::overflow_error("YPoint denominators exceed int64");

    DenseYPoint dense;
    dense.n = y.n();
    dense.denominator = common.convert_to<std::int64_t>();
    dense.numerators.assign(coordinate_count(y.n()), 0);
    for (const auto& [cell, v] : y.values()) {
        const Int scaled = numerator(v) * (common / denominator(v));
        if (abs(scaled) > limit) throw std::overflow_error("YPoint numerator exceeds int64");
        dense.numerators[coordinate_of(y.n(), cell)] = scaled.convert_to<std::int64_t>();
    }
    return dense;
}

}  // namespace qapf
