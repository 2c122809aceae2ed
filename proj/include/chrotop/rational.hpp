#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chrotop {

using Rational = boost::multiprecision::cpp_rational;

auto to_string(const Rational & r) -> std::string;

/// Parses "a" or "a/b".
auto parse_rational(const std::string & text) -> Rational;

/// base^(-k) for k >= 0.
auto inverse_power(int base, int k) -> Rational;

/// Integer power of a rational, exponent >= 0.
auto power(const Rational & r, int k) -> Rational;

}
