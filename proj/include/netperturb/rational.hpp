#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace netperturb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a non-negative cost literal: "12", "0.5", "3.25", or "p/q".
// Throws std::invalid_argument with a message naming the offending text.
Rational parse_decimal(const std::string& s);

// Canonical rendering. Integers render bare, terminating decimals render as
// decimals with no trailing zeros, anything else falls back to "p/q".
// parse_decimal(format_rational(x)) == x for every non-negative x.
std::string format_rational(const Rational& r);

}  // namespace netperturb
