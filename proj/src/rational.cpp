#include "qapf/rational.hpp"

#include <stdexcept>

namespace qapf {

std::string to_string(const Rational& value)
{
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text)
{
    using boost::multiprecision::mpz_int;
    const auto fail = [&] { return std::invalid_argument("cannot parse rational '" + std::string(text) + "'"); };
    try {
        const auto slash = text.find('/');
        const mpz_int num(std::string(text.substr(0, slash)));
        const mpz_int den = slash == std::string_view::npos ? mpz_int(1) : mpz_int(std::string(text.substr(slash + 1)));
        if (den == 0) throw fail();
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw fail();
    }
}

}  // namespace qapf
