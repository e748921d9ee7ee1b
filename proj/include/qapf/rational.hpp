#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace qapf {

using Rational = boost::multiprecision::mpq_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

/// C(x, 2) = x(x-1)/2 for any integer x, so C(-1, 2) = 1.
constexpr std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

}  // namespace qapf
