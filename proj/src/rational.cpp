#include <chrotop/error.hpp>
#include <chrotop/rational.hpp>

namespace chrotop {

auto to_string(const Rational & r) -> std::string
{
    return r.str();
}

auto parse_rational(const std::string & text) -> Rational
{
    try {
        return Rational(text);
    }
    catch (const std::exception &) {
        throw Error(ErrorCode::ParseError, "not a rational: " + text);
    }
}

auto inverse_power(int base, int k) -> Rational
{
    boost::multiprecision::cpp_int den = 1;
    for (int i = 0; i < k; ++i)
        den *= base;
    return Rational(1, den);
}

auto power(const Rational & r, int k) -> Rational
{
    Rational out = 1;
    for (int i = 0; i < k; ++i)
        out *= r;
    return out;
}

}
